#pragma once
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevtori {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Words in the notation of the tables: h_2n_1n_{53}, n_0, named generators,
// powers x^{-1}, x^6, parentheses and commutators [x,y].
struct Expr {
  enum class Op { One, H, N, Name, Product, Power, Comm };
  Op op = Op::One;
  int index = 0;          // H, N: root index (N with 0 is the central lift)
  std::string name;       // Name
  long long exponent = 1; // Power
  std::vector<std::shared_ptr<const Expr>> args;

  std::string str() const;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string &text);

// "a^6=b^2=[a,b]=1" becomes the list of sides; every side must equal the last
std::vector<ExprPtr> parse_relation_chain(const std::string &text);

// "a=x=h_4n": every name on the left is bound to the rightmost expression
struct Definition {
  std::vector<std::string> names;
  ExprPtr value;
};
Definition parse_definition(const std::string &text);

// Evaluate an expression in any group given by these callbacks.
template <class G> struct ExprEval {
  std::function<G()> one;
  std::function<G(int)> h;
  std::function<G(int)> n;
  std::function<G(const std::string &)> name;
  std::function<G(const G &, const G &)> mul;
  std::function<G(const G &)> inv;

  G operator()(const Expr &e) const {
    switch (e.op) {
    case Expr::Op::One:
      return one();
    case Expr::Op::H:
      return h(e.index);
    case Expr::Op::N:
      return n(e.index);
    case Expr::Op::Name:
      return name(e.name);
    case Expr::Op::Product: {
      G acc = one();
      for (auto &a : e.args)
        acc = mul(acc, (*this)(*a));
      return acc;
    }
    case Expr::Op::Power: {
      G base = (*this)(*e.args[0]);
      long long m = e.exponent;
      if (m < 0) {
        base = inv(base);
        m = -m;
      }
      G acc = one();
      while (m > 0) {
        if (m & 1)
          acc = mul(acc, base);
        base = mul(base, base);
        m >>= 1;
      }
      return acc;
    }
    case Expr::Op::Comm: {
      G x = (*this)(*e.args[0]), y = (*this)(*e.args[1]);
      return mul(mul(mul(x, y), inv(x)), inv(y));
    }
    }
    throw std::logic_error("bad expression node");
  }
};

} // namespace chevtori
