#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevtori/intlinalg.hpp"
#include "chevtori/rootsys.hpp"

namespace chevtori {

using Perm = std::vector<uint16_t>;

Perm perm_identity(size_t degree);
// (a * b)(x) = a(b(x))
Perm perm_mul(const Perm &a, const Perm &b);
Perm perm_inv(const Perm &a);
bool perm_is_identity(const Perm &a);
Perm weyl_perm(const WeylElement &w);

// Schreier-Sims with explicit transversals
class PermGroup {
public:
  PermGroup(size_t degree, const std::vector<Perm> &generators);

  size_t degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }
  const std::vector<uint16_t> &base() const { return base_; }
  BigInt order() const;
  bool contains(const Perm &p) const;

private:
  struct Level {
    uint16_t point;
    std::vector<Perm> gens;
    std::vector<int> orbit;              // points in discovery order
    std::vector<std::optional<Perm>> u;  // u[x](point) = x
  };
  void rebuild_orbit(Level &lv) const;
  // residue and the level at which sifting stopped
  std::pair<Perm, size_t> sift(Perm p, size_t from) const;
  void build();

  size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  std::vector<uint16_t> base_;
};

PermGroup weyl_group(const RootSystem &rs);
PermGroup weyl_subgroup(const RootSystem &rs, const std::vector<WeylElement> &gens);

struct CentralizerImage {
  bool all_centralize = true;
  std::vector<int> offenders; // indices of generators not commuting with w
  BigInt order;
};
CentralizerImage centralizer_image_order(const WeylElement &w, const std::vector<WeylElement> &gens);

// size of the conjugacy class by orbit enumeration; nullopt past the budget
std::optional<uint64_t> conjugacy_class_size(const WeylElement &w, uint64_t budget);
// |C_W(w)| = |W| / |class|
std::optional<BigInt> centralizer_order(const WeylElement &w, uint64_t budget);
// counts isometries of the root system commuting with w, keeping those in W;
// cost grows with |C_W(w)|, so it complements the class walk. nullopt past the limit
std::optional<BigInt> centralizer_order_search(const WeylElement &w, uint64_t limit);
// class walk when the class is small, search otherwise
BigInt centralizer_order_exact(const WeylElement &w);

struct ConjugacyResult {
  enum class Verdict { Witness, ConsistentInvariants, Distinct } verdict;
  std::optional<WeylElement> witness; // x w x^{-1} = w'
  std::string note;
};
ConjugacyResult conjugacy_witness(const WeylElement &w, const WeylElement &w2, uint64_t budget,
                                  uint64_t seed);
std::string verdict_name(ConjugacyResult::Verdict v);

} // namespace chevtori
