#pragma once
#include <string>
#include <unordered_map>
#include <vector>

#include "chevtori/matrix.hpp"

namespace chevtori {

enum class Kind { E6, E7, E8 };

Kind parse_kind(const std::string &s);
std::string kind_name(Kind k);

// Roots are addressed by signed indices: +k is the k-th positive root in the
// fixed total order (1-based), -k its negative. 0 means "not a root".
class RootSystem {
public:
  explicit RootSystem(Kind kind);

  // shared immutable instance per type
  static const RootSystem &get(Kind kind);

  Kind kind() const { return kind_; }
  int rank() const { return l_; }
  int num_positive() const { return n_; }
  const IMat &cartan() const { return cartan_; }
  bool adjacent(int i, int j) const { return i != j && cartan_(i - 1, j - 1) == -1; }

  const IVec &coords(int r) const;
  int height(int r) const;
  int index_of(const IVec &c) const;
  bool is_root_vector(const IVec &c) const { return index_of(c) != 0; }
  bool valid_index(int r) const { return r != 0 && r >= -n_ && r <= n_; }

  int64_t pairing(const IVec &a, const IVec &b) const;
  int pairing(int r, int s) const;
  // index of r+s when it is a root, else 0
  int sum(int r, int s) const;

  IVec reflect(int s, const IVec &v) const;
  int reflect(int s, int r) const;
  IMat reflection_matrix(int s) const;

  // position in [0, 2N) used by permutation tables
  int pos(int r) const { return r > 0 ? r - 1 : n_ - r - 1; }
  int root_at(int p) const { return p < n_ ? p + 1 : -(p - n_ + 1); }

  std::string to_json() const;

private:
  static uint64_t key(const IVec &c);

  Kind kind_;
  int l_ = 0, n_ = 0;
  IMat cartan_;
  std::vector<IVec> pos_roots_, neg_roots_;
  std::unordered_map<uint64_t, int> lookup_;
  std::vector<std::vector<int>> simple_reflect_;
};

class WeylElement {
public:
  WeylElement() = default;
  explicit WeylElement(const RootSystem &rs);
  WeylElement(const RootSystem &rs, IMat m);

  // reflections in arbitrary positive or negative roots are allowed
  static WeylElement from_word(const RootSystem &rs, const std::vector<int> &word);
  static WeylElement simple(const RootSystem &rs, int i);

  const RootSystem &system() const { return *rs_; }
  // column i is the image of the i-th simple root
  const IMat &matrix() const { return m_; }

  WeylElement operator*(const WeylElement &o) const;
  bool operator==(const WeylElement &o) const { return m_ == o.m_; }
  WeylElement inverse() const;

  IVec apply(const IVec &v) const { return m_ * v; }
  int apply(int r) const;
  bool is_identity() const;

  // true when w(alpha_i) is negative
  bool right_descent(int i) const;
  int length() const;
  std::vector<int> reduced_word() const;
  int order() const;

  // images of all 2N roots, indexed by RootSystem::pos
  std::vector<int> root_permutation() const;

private:
  const RootSystem *rs_ = nullptr;
  IMat m_;
};

std::string word_string(const std::vector<int> &word);

} // namespace chevtori
