#include "chevtori/matrix.hpp"

namespace chevtori {

IMat::IMat(std::initializer_list<std::initializer_list<int64_t>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (auto &r : init) {
    if (r.size() != cols_)
      throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IMat IMat::identity(size_t n) {
  IMat m(n, n);
  for (size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IVec IMat::row(size_t i) const {
  return IVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

IVec IMat::col(size_t j) const {
  IVec v(rows_);
  for (size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

IMat IMat::transpose() const {
  IMat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IMat IMat::operator*(const IMat &o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix shape mismatch");
  IMat p(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      int64_t x = (*this)(i, k);
      if (!x)
        continue;
      for (size_t j = 0; j < o.cols_; ++j)
        p(i, j) += x * o(k, j);
    }
  return p;
}

IVec IMat::operator*(const IVec &v) const {
  if (cols_ != v.size())
    throw std::invalid_argument("matrix/vector shape mismatch");
  IVec r(rows_, 0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      r[i] += (*this)(i, j) * v[j];
  return r;
}

IMat IMat::operator+(const IMat &o) const {
  IMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] += o.a_[i];
  return r;
}

IMat IMat::operator-(const IMat &o) const {
  IMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] -= o.a_[i];
  return r;
}

IMat IMat::scaled(int64_t s) const {
  IMat r = *this;
  for (auto &x : r.a_)
    x *= s;
  return r;
}

std::ostream &operator<<(std::ostream &os, const IMat &m) {
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

} // namespace chevtori
