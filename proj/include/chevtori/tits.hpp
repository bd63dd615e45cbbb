#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevtori/chevalley.hpp"
#include "chevtori/expr.hpp"
#include "chevtori/rootsys.hpp"

namespace chevtori {

enum class Isogeny { SC, AD };
Isogeny parse_isogeny(const std::string &s);
std::string isogeny_name(Isogeny i);

// h * lift(w): h is a bit vector over h_1(-1)..h_l(-1), lift(w) the product of
// n_i along any reduced word of w
struct TitsElement {
  uint32_t h = 0;
  WeylElement w;
};

class TitsGroup {
public:
  // trivial_h models characteristic 2, where every h_r(-1) is 1
  TitsGroup(Kind kind, Isogeny iso = Isogeny::SC, bool trivial_h = false);

  const RootSystem &system() const { return *rs_; }
  Kind kind() const { return rs_->kind(); }
  Isogeny isogeny() const { return iso_; }
  bool trivial_h() const { return trivial_h_; }
  // bits of H that die in the adjoint group
  uint32_t center_mask() const { return center_; }

  TitsElement identity() const;
  TitsElement h(uint32_t mask) const;
  // h_r(-1) for any root r
  TitsElement h_root(int r) const;
  static uint32_t root_parity(const RootSystem &rs, int r);
  // n_r(1) for any nonzero root index; computed from eta by recursion on height
  TitsElement n(int r) const;
  TitsElement n0() const;
  bool has_n0() const { return kind() != Kind::E6; }

  TitsElement mul(const TitsElement &a, const TitsElement &b) const;
  TitsElement inv(const TitsElement &a) const;
  TitsElement pow(const TitsElement &a, long long m) const;
  // b a b^{-1}
  TitsElement conj(const TitsElement &a, const TitsElement &b) const;
  // a b a^{-1} b^{-1}
  TitsElement comm(const TitsElement &a, const TitsElement &b) const;
  long long order(const TitsElement &a) const;

  uint32_t reduce(uint32_t h) const;
  bool equal(const TitsElement &a, const TitsElement &b) const;
  bool is_identity(const TitsElement &a) const;
  bool in_h(const TitsElement &a) const { return a.w.is_identity(); }

  // conjugation of an h bit vector by lift(w)
  uint32_t act(const WeylElement &w, uint32_t h) const;

  TitsElement eval(const Expr &e, const std::map<std::string, TitsElement> &env = {}) const;
  TitsElement parse(const std::string &text,
                    const std::map<std::string, TitsElement> &env = {}) const;
  // canonical "h_2n_1n_4..." string along the reduced word
  std::string format(const TitsElement &a) const;

  // image in the adjoint oracle
  SparseMat to_adjoint(const TitsElement &a) const;

private:
  TitsElement mul_n(TitsElement a, int i) const;
  void fold_reflection(IMat &m, int i) const;

  const RootSystem *rs_;
  Isogeny iso_;
  bool trivial_h_;
  uint32_t center_ = 0;
  std::vector<TitsElement> n_pos_;
};

struct LiftCheck {
  long long order = 0;
  int weyl_order = 0;
  bool image_matches = false;
  bool ok() const { return image_matches && order == weyl_order; }
};

// order of a claimed lift and whether pi(lift) is the Weyl element of the word
LiftCheck lift_order_check(const TitsGroup &g, const std::vector<int> &word,
                           const TitsElement &lift);

} // namespace chevtori
