#include "chevtori/intlinalg.hpp"

#include <stdexcept>

namespace chevtori {

BigMat to_big(const IMat &m) {
  BigMat b(m.rows(), BigVec(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      b[i][j] = m(i, j);
  return b;
}

BigMat big_identity(size_t n) {
  BigMat b(n, BigVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    b[i][i] = 1;
  return b;
}

BigMat big_mul(const BigMat &a, const BigMat &b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  BigMat c(n, BigVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0)
        continue;
      for (size_t j = 0; j < m; ++j)
        c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

BigVec big_mul(const BigMat &a, const BigVec &v) {
  BigVec out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      out[i] += a[i][j] * v[j];
  return out;
}

namespace {

// floor division keeps remainders non-negative for positive divisors
BigInt floor_div(const BigInt &a, const BigInt &b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

void row_axpy(BigMat &m, size_t dst, size_t src, const BigInt &f) {
  for (size_t j = 0; j < m[dst].size(); ++j)
    m[dst][j] -= f * m[src][j];
}

void col_axpy(BigMat &m, size_t dst, size_t src, const BigInt &f) {
  for (auto &row : m)
    row[dst] -= f * row[src];
}

void swap_cols(BigMat &m, size_t a, size_t b) {
  for (auto &row : m)
    std::swap(row[a], row[b]);
}

} // namespace

Echelon row_echelon(const BigMat &A) {
  Echelon e;
  e.R = A;
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  e.T = big_identity(rows);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (e.R[i][c] != 0 && (best == rows || abs(e.R[i][c]) < abs(e.R[best][c])))
          best = i;
      if (best == rows)
        break;
      std::swap(e.R[r], e.R[best]);
      std::swap(e.T[r], e.T[best]);
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (e.R[i][c] == 0)
          continue;
        BigInt f = floor_div(e.R[i][c], e.R[r][c]);
        row_axpy(e.R, i, r, f);
        row_axpy(e.T, i, r, f);
        if (e.R[i][c] != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (r < rows && e.R[r][c] != 0) {
      if (e.R[r][c] < 0) {
        for (auto &x : e.R[r])
          x = -x;
        for (auto &x : e.T[r])
          x = -x;
      }
      ++r;
    }
  }
  e.rank = r;
  return e;
}

BigMat left_kernel(const BigMat &A) {
  Echelon e = row_echelon(A);
  BigMat k;
  for (size_t i = e.rank; i < A.size(); ++i)
    k.push_back(e.T[i]);
  return k;
}

Smith smith_normal_form(const BigMat &A) {
  Smith s;
  s.D = A;
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  s.U = big_identity(rows);
  s.V = big_identity(cols);
  BigMat &D = s.D;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      size_t bi = rows, bj = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (D[i][j] != 0 && (bi == rows || abs(D[i][j]) < abs(D[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows)
        break;
      std::swap(D[t], D[bi]);
      std::swap(s.U[t], s.U[bi]);
      swap_cols(D, t, bj);
      swap_cols(s.V, t, bj);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0)
          continue;
        BigInt f = floor_div(D[i][t], D[t][t]);
        row_axpy(D, i, t, f);
        row_axpy(s.U, i, t, f);
        if (D[i][t] != 0)
          clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0)
          continue;
        BigInt f = floor_div(D[t][j], D[t][t]);
        col_axpy(D, j, t, f);
        col_axpy(s.V, j, t, f);
        if (D[t][j] != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // divisibility: pull an offending row into the pivot row and retry
      size_t bad = rows;
      for (size_t i = t + 1; i < rows && bad == rows; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      row_axpy(D, t, bad, -1);
      row_axpy(s.U, t, bad, -1);
    }
    if (D[t][t] < 0) {
      for (auto &x : D[t])
        x = -x;
      for (auto &x : s.U[t])
        x = -x;
    }
  }
  for (size_t t = 0; t < std::min(rows, cols); ++t)
    s.diag.push_back(D[t][t]);
  return s;
}

BigInt determinant(BigMat A) {
  size_t n = A.size();
  if (n == 0)
    return 1;
  if (A[0].size() != n)
    throw std::invalid_argument("determinant of a non-square matrix");
  // Bareiss fraction-free elimination
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && A[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(A[k], A[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

} // namespace chevtori
