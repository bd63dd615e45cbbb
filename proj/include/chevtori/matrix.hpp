#pragma once
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace chevtori {

using IVec = std::vector<int64_t>;

// dense row-major integer matrix; sizes stay tiny (rank <= 8) except in the oracle
class IMat {
public:
  IMat() = default;
  IMat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, 0) {}
  IMat(std::initializer_list<std::initializer_list<int64_t>> init);

  static IMat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  int64_t &operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  int64_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IVec row(size_t i) const;
  IVec col(size_t j) const;
  IMat transpose() const;

  bool operator==(const IMat &o) const = default;

  IMat operator*(const IMat &o) const;
  IVec operator*(const IVec &v) const;
  IMat operator+(const IMat &o) const;
  IMat operator-(const IMat &o) const;
  IMat scaled(int64_t s) const;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<int64_t> a_;
};

std::ostream &operator<<(std::ostream &os, const IMat &m);

} // namespace chevtori
