#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chevtori/rootsys.hpp"

namespace chevtori {

struct ExtraspecialPair {
  int r = 0, s = 0, sign = 0;
};

// one pair per non-simple positive root, ordered by (r, s); signs left at 0
std::vector<ExtraspecialPair> extraspecial_pairs(const RootSystem &rs);

class StructureConstants {
public:
  explicit StructureConstants(const RootSystem &rs);
  static const StructureConstants &get(Kind kind);

  const RootSystem &system() const { return *rs_; }
  int N(int r, int s) const { return table_[rs_->pos(r) * width_ + rs_->pos(s)]; }
  const std::vector<ExtraspecialPair> &extraspecial() const { return extra_; }

  // antisymmetry, N_{-r,-s} = -N_{r,s}, triangle and Jacobi checks; throws on failure
  void validate() const;

  // rendered like "[⟨1, 3, 1⟩, ⟨1, 10, 1⟩, ...]"
  std::string extraspecial_string() const;
  std::string to_json() const;

private:
  const RootSystem *rs_;
  int width_;
  std::vector<int8_t> table_;
  std::vector<ExtraspecialPair> extra_;
};

// sparse column-major integer matrix; elements of the adjoint group live here
class SparseMat {
public:
  using Column = std::vector<std::pair<int, int64_t>>;

  SparseMat() = default;
  explicit SparseMat(int dim) : cols_(dim) {}
  static SparseMat identity(int dim);

  int dim() const { return static_cast<int>(cols_.size()); }
  const Column &col(int j) const { return cols_[j]; }
  Column &col(int j) { return cols_[j]; }
  int64_t at(int i, int j) const;
  void set(int i, int j, int64_t v);
  void normalize();

  SparseMat operator*(const SparseMat &o) const;
  SparseMat operator+(const SparseMat &o) const;
  SparseMat scaled(int64_t s) const;
  bool operator==(const SparseMat &o) const { return cols_ == o.cols_; }
  bool is_identity() const;
  SparseMat pow(int64_t m) const;

private:
  std::vector<Column> cols_;
};

// Chevalley-basis adjoint representation; basis is e_r for all 2N roots
// (ordered by RootSystem::pos) followed by h_1..h_l
class AdjointRep {
public:
  explicit AdjointRep(const StructureConstants &sc);
  static const AdjointRep &get(Kind kind);

  const RootSystem &system() const { return *rs_; }
  const StructureConstants &constants() const { return *sc_; }
  int dim() const { return dim_; }

  SparseMat ad_e(int r) const;
  SparseMat x(int r, int64_t t) const;
  // n_r(t) = x_r(t) x_{-r}(-1/t) x_r(t), t = +-1
  SparseMat n(int r, int t = 1) const;
  const SparseMat &n_cached(int r) const { return n_cache_[rs_->pos(r)]; }
  SparseMat h_minus1(int r) const;
  // product of h_i(-1) over the bits of mask
  SparseMat h_mask(uint32_t mask) const;

  // bracket of two basis vectors, as a sparse vector
  SparseMat::Column bracket(int a, int b) const;

private:
  const RootSystem *rs_;
  const StructureConstants *sc_;
  int dim_;
  std::vector<SparseMat> n_cache_;
};

// eta(s, r): n_s n_r n_s^{-1} = h_{w_s(r)}(eta) n_{w_s(r)}, read off the adjoint oracle
class EtaTable {
public:
  explicit EtaTable(const AdjointRep &adj);
  static const EtaTable &get(Kind kind);
  int eta(int s, int r) const { return table_[(s - 1) * width_ + rs_->pos(r)]; }
  std::string to_json() const;

private:
  const RootSystem *rs_;
  int width_;
  std::vector<int8_t> table_;
};

} // namespace chevtori
