#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "circconj/exactnum/continued_fraction.hpp"

namespace circconj {

/// Owning MPFR value. Binary operations round to the larger of the two
/// operand precisions (round-to-nearest).
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(long v, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_string(const std::string& decimal, mpfr_prec_t bits);
  static Real from_double(double v, mpfr_prec_t bits);
  static Real rational(i64 num, i64 den, mpfr_prec_t bits);
  static Real from_surd(const Surd& s, mpfr_prec_t bits);
  /// Value of a declared irrational: its last convergent.
  static Real from_alpha(const Alpha& a, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);
  static Real infinity(int sign, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// floor as a 64-bit integer (throws when out of range).
  i64 floor_i64() const;
  std::string to_string(int digits = 40) const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real& add_int(i64 v);
  Real& mul_int(i64 v);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  friend Real floor(const Real& x);
  friend Real abs(const Real& x);
  friend Real atan(const Real& x);
  friend Real tan(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real pow_int(const Real& x, i64 e);

 private:
  mpfr_t v_;
};

/// Working precision and the trust margins used by every evaluation.
///
/// Error model: a breakpoint test on an argument x is resolvable when the
/// argument is farther than resolution(x) = max(1, |x|) * 2^-(bits/2) from
/// the breakpoint. `delta` is the caller-facing margin: grids stay at least
/// delta away from integers (line) or marked points (circle). Results at
/// such points are trusted to `eval_tolerance`, which defaults to
/// 2^-(bits/4) and may not be set below the resolution.
struct Precision {
  long working_bits = 256;
  double eval_tolerance = 0x1p-64;
  double delta = 1e-4;
  long power_cap = 64;

  static Precision with_bits(long bits);
  /// Throws DomainError when the fields are inconsistent.
  void validate() const;
  Real resolution(const Real& x) const;
};

}  // namespace circconj
