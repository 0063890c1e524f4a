#pragma once

#include <compare>
#include <string>

#include "circconj/exactnum/int_util.hpp"

namespace circconj {

/// Exact quadratic irrational (a + b*sqrt(d)) / c.
///
/// Canonical form: c > 0, d square-free, gcd(a, b, c) = 1, and rationals
/// carry b = 0, d = 1. Two surds can be combined when they share d or when
/// one of them is rational; anything else is a DomainError.
class Surd {
 public:
  Surd() = default;
  Surd(i64 a, i64 b, i64 c, i64 d);
  static Surd integer(i64 n) { return Surd(n, 0, 1, 1); }
  static Surd rational(i64 num, i64 den) { return Surd(num, 0, den, 1); }

  i64 a() const { return a_; }
  i64 b() const { return b_; }
  i64 c() const { return c_; }
  i64 d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && c_ == 1; }
  int sign() const;

  Surd operator-() const { return Surd(-a_, -b_, c_, d_); }
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y) = default;
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

  /// Algebraic conjugate (a - b*sqrt(d)) / c.
  Surd conjugate() const { return Surd(a_, -b_, c_, d_); }

  /// Largest integer not exceeding the value.
  i64 floor() const;

  double to_double() const;
  std::string to_string() const;

 private:
  static Surd from_wide(i128 a, i128 b, i128 c, i64 d);

  i64 a_ = 0;
  i64 b_ = 0;
  i64 c_ = 1;
  i64 d_ = 1;
};

/// Common square-free radicand of x and y (1 when both rational).
i64 common_radicand(const Surd& x, const Surd& y);

}  // namespace circconj
