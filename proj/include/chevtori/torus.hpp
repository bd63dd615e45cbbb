#pragma once
#include <map>
#include <string>
#include <vector>

#include "chevtori/intlinalg.hpp"
#include "chevtori/tits.hpp"

namespace chevtori {

// Row i of A gives the i-th coordinate of n H n^{-1}: lambda'_i = prod_j lambda_j^{a_ij}
IMat conj_matrix(const WeylElement &w);

// (H u)^m = (B H) u^m with B = sum_{t<m} A^t
struct PowerExponents {
  IMat B;
  TitsElement power;
};
PowerExponents power_exponents(const TitsGroup &g, const TitsElement &u, long long m);

// "(λ_4^2,-λ_4^3,...)": coordinate i is (-1)^{bit i} prod_j λ_j^{E_ij}
std::string render_torus(const IMat &E, uint32_t signs, const std::string &var = "λ");

// integer polynomials in q
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> c);
  static Poly constant(const BigInt &c);
  static Poly q();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt> &coeffs() const { return c_; }
  BigInt eval(const BigInt &x) const;
  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly pow(unsigned e) const;
  Poly operator-() const;
  bool operator==(const Poly &o) const { return c_ == o.c_; }
  std::string str() const;

private:
  void trim();
  std::vector<BigInt> c_;
};

// grammar: sum of products of q, integers, parentheses, ^k; "\times" or "×" is a product
Poly parse_factor_string(const std::string &s);

// a "Cyclic structure" column entry: each top-level "\times" separates cyclic
// factors; "(P)^k" standing alone means k copies of Z_P
struct CyclicFactor {
  Poly order;
  int copies = 1;
};
std::vector<CyclicFactor> parse_cyclic_structure(const std::string &s);

// det(qA - I) as a polynomial, normalized to a positive leading coefficient
Poly twisted_order_polynomial(const WeylElement &w);

struct TwistedTorusStructure {
  long long q = 0;
  BigVec invariant_factors; // Smith normal form of qA - I, trivial factors dropped
  BigInt order;
};
TwistedTorusStructure twisted_structure(const WeylElement &w, long long q);

// compare finite abelian groups given as lists of cyclic orders
bool same_abelian_group(const BigVec &a, const BigVec &b);

// Concrete torus normalizer over F_{q^k}: a torus coordinate is an exponent of a
// fixed generator of F_{q^k}^*, reduced modulo M = q^k - 1. The symbol -1 is M/2.
struct ConcreteElement {
  IVec e;
  TitsElement t;
};

class ConcreteNormalizer {
public:
  // g must be simply connected; center_mask lists coordinates identified in the
  // adjoint quotient (h_2h_5h_7 for E7)
  ConcreteNormalizer(const TitsGroup &g, long long q, int k = 2, uint32_t center_mask = 0);

  long long q() const { return q_; }
  int64_t modulus() const { return M_; }
  const TitsGroup &group() const { return *g_; }

  ConcreteElement torus(const IVec &e) const;
  ConcreteElement tits(const TitsElement &t) const;
  ConcreteElement one() const;
  ConcreteElement mul(const ConcreteElement &a, const ConcreteElement &b) const;
  ConcreteElement inv(const ConcreteElement &a) const;
  ConcreteElement pow(const ConcreteElement &a, long long m) const;
  ConcreteElement sigma(const ConcreteElement &a) const;
  bool is_identity(const ConcreteElement &a) const;
  bool equal(const ConcreteElement &a, const ConcreteElement &b) const;
  // x sigma(y) x^{-1} = y
  bool fixed_by_twist(const ConcreteElement &y, const ConcreteElement &x) const;

  // smallest exponent x with k*x = rhs (rhs is 0 for +1, M/2 for -1); throws if none
  int64_t root_of(long long k, bool minus_one) const;

  // parse a coordinate such as "-alpha", "alpha*beta^-1", "delta^4", "1"
  int64_t coordinate(const std::string &s, const std::map<std::string, int64_t> &symbols) const;

  std::string format(const ConcreteElement &a) const;

private:
  IVec normalized_torus(const ConcreteElement &a) const;

  const TitsGroup *g_;
  long long q_;
  int64_t M_;
  uint32_t center_;
};

} // namespace chevtori
