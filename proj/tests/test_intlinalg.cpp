#include <doctest.h>

#include "chevtori/intlinalg.hpp"

using namespace chevtori;

namespace {

BigMat M(std::initializer_list<std::initializer_list<long>> rows) {
  BigMat m;
  for (auto &r : rows) {
    BigVec v;
    for (long x : r)
      v.push_back(x);
    m.push_back(v);
  }
  return m;
}

} // namespace

TEST_CASE("Smith normal form") {
  BigMat A = M({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  Smith s = smith_normal_form(A);
  REQUIRE(s.diag.size() == 3);
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 6);
  CHECK(s.diag[2] == 12);
  CHECK(big_mul(big_mul(s.U, A), s.V) == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
}

TEST_CASE("determinant") {
  CHECK(determinant(M({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(M({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}})) == -5);
  CHECK(determinant(big_identity(4)) == 1);
}

TEST_CASE("left kernel and echelon form") {
  BigMat A = M({{1, 2}, {2, 4}, {1, 0}});
  BigMat K = left_kernel(A);
  REQUIRE(K.size() == 1);
  BigVec zero(2, 0);
  BigVec v(2, 0);
  for (size_t j = 0; j < 2; ++j)
    for (size_t i = 0; i < 3; ++i)
      v[j] += K[0][i] * A[i][j];
  CHECK(v == zero);
  Echelon e = row_echelon(A);
  CHECK(e.rank == 2);
  CHECK(big_mul(e.T, A) == e.R);
}
