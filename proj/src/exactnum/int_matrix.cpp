#include "circconj/exactnum/int_matrix.hpp"

namespace circconj {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DomainError("matrix shapes do not match");
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = checked_add(out[i][j], checked_mul(a[i][l], b[l][j]));
    }
  }
  return out;
}

IntVector mat_vec(const IntMatrix& a, const IntVector& v) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw DomainError("matrix and vector sizes do not match");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] = checked_add(out[i], checked_mul(a[i][j], v[j]));
  }
  return out;
}

IntVector vec_add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("vector sizes do not match");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

IntVector vec_sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("vector sizes do not match");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

IntVector vec_scale(const IntVector& a, i64 s) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(a[i], s);
  return out;
}

bool is_zero(const IntVector& v) {
  for (i64 x : v)
    if (x != 0) return false;
  return true;
}

bool is_unit_upper_triangular(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j <= i; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

IntMatrix unit_upper_inverse(const IntMatrix& m) {
  if (!is_unit_upper_triangular(m)) throw DomainError("matrix is not unit upper triangular");
  const std::size_t n = m.size();
  IntMatrix inv = identity_matrix(n);
  // Back substitution column by column: inv[i][j] = -sum_{i<l<=j} m[i][l] inv[l][j].
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      i64 acc = 0;
      for (std::size_t l = i + 1; l <= j; ++l) acc = checked_add(acc, checked_mul(m[i][l], inv[l][j]));
      inv[i][j] = -acc;
    }
  return inv;
}

}  // namespace circconj
