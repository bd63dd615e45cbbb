#include "chevtori/expr.hpp"

#include <cctype>
#include <sstream>

namespace chevtori {

namespace {

class Parser {
public:
  explicit Parser(const std::string &s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c)))
        t_ += c;
  }

  bool done() const { return p_ >= t_.size(); }
  char peek() const { return done() ? '\0' : t_[p_]; }

  [[noreturn]] void fail(const std::string &what) const {
    std::ostringstream os;
    os << what << " at offset " << p_ << " in '" << t_ << "'";
    throw ParseError(os.str());
  }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++p_;
  }

  long long integer(bool allow_sign) {
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      ++p_;
    }
    bool neg = false;
    if (allow_sign && peek() == '-') {
      neg = true;
      ++p_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (t_[p_++] - '0');
    if (braced)
      expect('}');
    return neg ? -v : v;
  }

  ExprPtr product(char stop1, char stop2 = '\0') {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::Product;
    while (!done() && peek() != stop1 && (stop2 == '\0' || peek() != stop2))
      e->args.push_back(factor());
    if (e->args.empty())
      fail("empty word");
    if (e->args.size() == 1)
      return e->args[0];
    return e;
  }

  ExprPtr factor() {
    ExprPtr base = primary();
    while (peek() == '^') {
      ++p_;
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Power;
      e->exponent = integer(true);
      e->args.push_back(base);
      base = e;
    }
    return base;
  }

  ExprPtr primary() {
    char c = peek();
    auto e = std::make_shared<Expr>();
    if (c == '(') {
      ++p_;
      ExprPtr inner = product(')');
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++p_;
      e->op = Expr::Op::Comm;
      e->args.push_back(product(','));
      expect(',');
      e->args.push_back(product(']'));
      expect(']');
      return e;
    }
    if (c == '1') {
      ++p_;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        fail("stray integer");
      e->op = Expr::Op::One;
      return e;
    }
    if ((c == 'h' || c == 'n') && p_ + 1 < t_.size() && t_[p_ + 1] == '_') {
      p_ += 2;
      e->op = c == 'h' ? Expr::Op::H : Expr::Op::N;
      e->index = static_cast<int>(integer(false));
      if (e->op == Expr::Op::H && e->index == 0)
        fail("h_0 is not a generator");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      e->op = Expr::Op::Name;
      e->name += t_[p_++];
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '\'')
        e->name += t_[p_++];
      return e;
    }
    fail("unexpected token");
  }

  std::string t_;
  size_t p_ = 0;
};

} // namespace

std::string Expr::str() const {
  std::ostringstream os;
  switch (op) {
  case Op::One:
    os << "1";
    break;
  case Op::H:
    os << "h_" << (index > 9 ? "{" + std::to_string(index) + "}" : std::to_string(index));
    break;
  case Op::N:
    os << "n_" << (index > 9 ? "{" + std::to_string(index) + "}" : std::to_string(index));
    break;
  case Op::Name:
    os << name;
    break;
  case Op::Product:
    for (auto &a : args)
      os << a->str();
    break;
  case Op::Power: {
    auto &b = *args[0];
    bool wrap = b.op == Op::Product || b.op == Op::Power;
    os << (wrap ? "(" : "") << b.str() << (wrap ? ")" : "") << "^";
    if (exponent < 0 || exponent > 9)
      os << "{" << exponent << "}";
    else
      os << exponent;
    break;
  }
  case Op::Comm:
    os << "[" << args[0]->str() << "," << args[1]->str() << "]";
    break;
  }
  return os.str();
}

ExprPtr parse_expr(const std::string &text) {
  Parser p(text);
  ExprPtr e = p.product('\0');
  if (!p.done())
    p.fail("trailing input");
  return e;
}

std::vector<ExprPtr> parse_relation_chain(const std::string &text) {
  std::vector<ExprPtr> sides;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{')
      ++depth;
    if (c == ')' || c == ']' || c == '}')
      --depth;
    if (c == '=' && depth == 0) {
      sides.push_back(parse_expr(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  sides.push_back(parse_expr(cur));
  if (sides.size() < 2)
    throw ParseError("relation without '=': " + text);
  return sides;
}

Definition parse_definition(const std::string &text) {
  auto sides = parse_relation_chain(text);
  Definition d;
  for (size_t i = 0; i + 1 < sides.size(); ++i) {
    if (sides[i]->op != Expr::Op::Name)
      throw ParseError("left side of a definition must be a name: " + text);
    d.names.push_back(sides[i]->name);
  }
  d.value = sides.back();
  return d;
}

} // namespace chevtori
