#pragma once

#include <vector>

#include "circconj/exactnum/int_util.hpp"

namespace circconj {

using IntVector = std::vector<i64>;
/// Dense row-major integer matrix.
using IntMatrix = std::vector<IntVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVector mat_vec(const IntMatrix& a, const IntVector& v);
IntVector vec_add(const IntVector& a, const IntVector& b);
IntVector vec_sub(const IntVector& a, const IntVector& b);
IntVector vec_scale(const IntVector& a, i64 s);
bool is_zero(const IntVector& v);
bool is_unit_upper_triangular(const IntMatrix& m);
/// Exact inverse of a unit upper triangular matrix.
IntMatrix unit_upper_inverse(const IntMatrix& m);

}  // namespace circconj
