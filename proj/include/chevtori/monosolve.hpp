#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevtori/intlinalg.hpp"
#include "chevtori/tits.hpp"

namespace chevtori {

// prod_j x_j^{exponents_j} = (-1)^{negative}
struct MonomialConstraint {
  std::vector<int64_t> exponents;
  bool negative = false;
  std::string origin;
};

struct ConstraintSystem {
  std::vector<std::string> unknowns;
  std::vector<MonomialConstraint> rows;

  int add_unknown(const std::string &label);
  void add(std::vector<int64_t> exponents, bool negative, std::string origin);
  nlohmann::json to_json() const;
  static ConstraintSystem from_json(const nlohmann::json &j);
};

// v with v S = 0 and v.s odd
struct Certificate {
  BigVec kernel_vector;
  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json &j);
};

// x_j = g^{exponents_j} for a generator g of a cyclic group of order modulus
struct Witness {
  BigInt modulus;
  BigVec exponents;
  nlohmann::json to_json() const;
};

struct SolveResult {
  bool sat = false;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
};

// solvability over the multiplicative group of an algebraically closed field of odd characteristic
SolveResult solve(const ConstraintSystem &sys);

// independent re-checks (certcheck.cpp)
bool check_certificate(const ConstraintSystem &sys, const Certificate &c, std::string *why = nullptr);
bool check_witness(const ConstraintSystem &sys, const Witness &w, std::string *why = nullptr);

// H t with H an unknown torus element: H = prod_k H_k^{E_k} over unknown coordinates
struct SymElement {
  IMat E; // l x (blocks * l)
  TitsElement t;
};

// Elements of the torus normalizer whose torus part is a monomial in unknown
// torus elements H_1..H_b. The Tits group must be simply connected; an adjoint
// quotient is modelled by center_mask (an extra unknown per relation).
class SymbolicNormalizer {
public:
  SymbolicNormalizer(const TitsGroup &g, int blocks, uint32_t center_mask = 0);

  const TitsGroup &group() const { return *g_; }
  int blocks() const { return blocks_; }
  int unknown_count() const { return blocks_ * l_; }

  SymElement unknown(int block) const;
  SymElement tits(const TitsElement &t) const;
  SymElement one() const;
  SymElement mul(const SymElement &a, const SymElement &b) const;
  SymElement inv(const SymElement &a) const;
  SymElement pow(const SymElement &a, long long m) const;
  SymElement comm(const SymElement &a, const SymElement &b) const;

  // fresh system with one unknown per coordinate of every block
  ConstraintSystem new_system(const std::vector<std::string> &block_names) const;

  // a = 1; throws when pi(a) is not trivial
  void require_identity(ConstraintSystem &sys, const SymElement &a, const std::string &origin) const;
  void require_commute(ConstraintSystem &sys, const SymElement &a, const SymElement &b,
                       const std::string &origin) const;
  void require_power(ConstraintSystem &sys, const SymElement &a, long long m, uint32_t target,
                     const std::string &origin) const;

  // "(1,λ_2^{-2}λ_4,...)" for a one-block element in H
  std::string render(const SymElement &a) const;

private:
  const TitsGroup *g_;
  int blocks_;
  int l_;
  uint32_t center_;
};

} // namespace chevtori
