#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circconj/errors.hpp"

namespace circconj {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 narrow(i128 v) {
  if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
    throw OverflowError("integer result exceeds 64 bits");
  return static_cast<i64>(v);
}

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 gcd(i64 a, i64 b) { return narrow(gcd128(a, b)); }

/// gcd of all entries; 0 for an empty or all-zero list.
inline i64 content(std::span<const i64> v) {
  i64 g = 0;
  for (i64 x : v) g = gcd(g, x);
  return g;
}

inline i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 floor_div(i64 a, i64 b) { return narrow(floor_div128(a, b)); }

/// Representative of a mod m in [0, m), m > 0.
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// floor(sqrt(n)) for n >= 0.
inline i128 isqrt128(i128 n) {
  if (n < 0) throw DomainError("isqrt of negative value");
  if (n < 2) return n;
  // Newton from a power-of-two upper bound.
  int bits = 0;
  for (i128 t = n; t > 0; t >>= 1) ++bits;
  i128 x = static_cast<i128>(1) << ((bits + 1) / 2);
  while (true) {
    i128 y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

struct ExtGcd {
  i64 g;
  i64 x;
  i64 y;  // a*x + b*y = g, g >= 0
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
  i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {narrow(old_r), narrow(old_s), narrow(old_t)};
}

/// Coefficients c with sum c_j * gens_j == target (mod m), or nullopt when
/// target is not in the subgroup generated by gens and m. Coefficients are
/// reduced into [0, m).
std::optional<std::vector<i64>> solve_in_span(i64 target, std::span<const i64> gens, i64 m);

}  // namespace circconj
