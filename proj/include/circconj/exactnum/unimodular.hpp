#pragma once

#include <array>
#include <string>

#include "circconj/exactnum/surd.hpp"

namespace circconj {

/// Integer 2x2 matrix ((m2, m1), (n2, n1)) with determinant +-1.
///
/// As a coordinate map it sends (x, y) to (m2 x + m1 y, n2 x + n1 y). As a
/// Mobius map it sends t to (m1 + n1 t) / (m2 + n2 t). The two actions are
/// contravariant: mobius(P) o mobius(Q) == mobius(Q * P).
struct UnimodularMatrix2 {
  i64 m2 = 1;
  i64 m1 = 0;
  i64 n2 = 0;
  i64 n1 = 1;

  static UnimodularMatrix2 identity() { return {}; }
  /// Builds from the textbook Mobius layout t -> (p t + q) / (r t + s).
  static UnimodularMatrix2 from_standard(i64 p, i64 q, i64 r, i64 s) { return {s, q, r, p}; }
  /// Validates |det| = 1.
  static UnimodularMatrix2 make(i64 m2, i64 m1, i64 n2, i64 n1);

  i64 det() const;
  UnimodularMatrix2 inverse() const;
  UnimodularMatrix2 negated() const { return {-m2, -m1, -n2, -n1}; }
  bool is_identity() const { return m2 == 1 && m1 == 0 && n2 == 0 && n1 == 1; }

  /// m2 + n2 t, the dilation factor of the realizing map x -> u x.
  Surd multiplier(const Surd& t) const;

  std::array<i64, 2> apply(std::array<i64, 2> v) const;

  /// Entries reduced into [0, k).
  UnimodularMatrix2 reduced_mod(i64 k) const;
  std::array<i64, 4> row_major() const { return {m2, m1, n2, n1}; }

  friend bool operator==(const UnimodularMatrix2&, const UnimodularMatrix2&) = default;
  friend UnimodularMatrix2 operator*(const UnimodularMatrix2& x, const UnimodularMatrix2& y);

  std::string to_string() const;
};

/// (m1 + n1 x) / (m2 + n2 x), exactly.
Surd mobius_apply(const UnimodularMatrix2& m, const Surd& x);

/// Integer power; negative exponents use the inverse.
UnimodularMatrix2 power(const UnimodularMatrix2& m, i64 e);

/// Matrix product with entries reduced mod k (no unimodularity check).
UnimodularMatrix2 mul_mod(const UnimodularMatrix2& x, const UnimodularMatrix2& y, i64 k);

/// Picks the sign of m so that m2 + n2 t > 0.
UnimodularMatrix2 sign_normalized(const UnimodularMatrix2& m, const Surd& t);

}  // namespace circconj
