#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "chevtori/matrix.hpp"

namespace chevtori {

using BigInt = boost::multiprecision::cpp_int;
using BigVec = std::vector<BigInt>;
using BigMat = std::vector<BigVec>;

BigMat to_big(const IMat &m);
BigMat big_identity(size_t n);
BigMat big_mul(const BigMat &a, const BigMat &b);
BigVec big_mul(const BigMat &a, const BigVec &v);

// T * A = R with T unimodular and R in row echelon form
struct Echelon {
  BigMat R, T;
  size_t rank = 0;
};
Echelon row_echelon(const BigMat &A);

// Z-basis of {v : v A = 0}
BigMat left_kernel(const BigMat &A);

// U * A * V = D diagonal, d_1 | d_2 | ..., U and V unimodular
struct Smith {
  BigMat U, V, D;
  BigVec diag;
};
Smith smith_normal_form(const BigMat &A);

BigInt determinant(BigMat A);

} // namespace chevtori
