#include "circconj/homeo/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace circconj {

namespace {

// Raises the precision of x to at least bits, keeping its value.
void widen(mpfr_ptr x, mpfr_prec_t bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_string(const std::string& decimal, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("not a decimal number: '" + decimal + "'");
  return r;
}

Real Real::from_double(double v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::rational(i64 num, i64 den, mpfr_prec_t bits) {
  Real r(static_cast<long>(num), bits);
  mpfr_div_si(r.v_, r.v_, static_cast<long>(den), MPFR_RNDN);
  return r;
}

Real Real::from_surd(const Surd& s, mpfr_prec_t bits) {
  mpfr_prec_t work = bits + 16;
  Real root(static_cast<long>(s.d()), work);
  mpfr_sqrt(root.v_, root.v_, MPFR_RNDN);
  mpfr_mul_si(root.v_, root.v_, static_cast<long>(s.b()), MPFR_RNDN);
  mpfr_add_si(root.v_, root.v_, static_cast<long>(s.a()), MPFR_RNDN);
  mpfr_div_si(root.v_, root.v_, static_cast<long>(s.c()), MPFR_RNDN);
  mpfr_prec_round(root.v_, bits, MPFR_RNDN);
  return root;
}

Real Real::from_alpha(const Alpha& a, mpfr_prec_t bits) {
  if (const Surd* s = std::get_if<Surd>(&a)) return from_surd(*s, bits);
  const auto& q = std::get<CfPrefix>(a).quotients;
  if (q.empty()) throw DomainError("empty continued fraction prefix");
  // Backward evaluation of the finite continued fraction.
  Real acc(static_cast<long>(q.back()), bits);
  for (std::size_t i = q.size() - 1; i-- > 0;) {
    mpfr_si_div(acc.v_, 1, acc.v_, MPFR_RNDN);
    mpfr_add_si(acc.v_, acc.v_, static_cast<long>(q[i]), MPFR_RNDN);
  }
  return acc;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::infinity(int sign, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_inf(r.v_, sign);
  return r;
}

i64 Real::floor_i64() const {
  if (!is_finite()) throw PrecisionExhausted("non-finite value");
  Real f = floor(*this);
  if (!mpfr_fits_slong_p(f.v_, MPFR_RNDN)) throw PrecisionExhausted("value out of 64-bit range: " + to_string(10));
  return static_cast<i64>(mpfr_get_si(f.v_, MPFR_RNDN));
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, v_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  widen(v_, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::add_int(i64 v) {
  mpfr_add_si(v_, v_, static_cast<long>(v), MPFR_RNDN);
  return *this;
}

Real& Real::mul_int(i64 v) {
  mpfr_mul_si(v_, v_, static_cast<long>(v), MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.v_, x.v_);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real atan(const Real& x) {
  Real r(x.precision());
  mpfr_atan(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real tan(const Real& x) {
  Real r(x.precision());
  mpfr_tan(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real pow_int(const Real& x, i64 e) {
  Real r(x.precision());
  mpfr_pow_si(r.v_, x.v_, static_cast<long>(e), MPFR_RNDN);
  return r;
}

Precision Precision::with_bits(long bits) {
  Precision p;
  p.working_bits = bits;
  p.eval_tolerance = std::ldexp(1.0, static_cast<int>(-bits / 4));
  return p;
}

void Precision::validate() const {
  if (working_bits < 64) throw DomainError("working_bits must be at least 64");
  if (!(eval_tolerance > 0)) throw DomainError("eval_tolerance must be positive");
  if (eval_tolerance < std::ldexp(1.0, static_cast<int>(-working_bits / 2)))
    throw DomainError("eval_tolerance is below what working_bits can resolve");
  if (!(delta > 0) || delta >= 0.5) throw DomainError("delta must lie in (0, 1/2)");
  if (power_cap < 1) throw DomainError("power_cap must be positive");
}

Real Precision::resolution(const Real& x) const {
  Real mag = abs(x);
  if (mag < Real(1, mag.precision())) mag = Real(1, x.precision());
  mpfr_mul_2si(mag.get(), mag.get(), -working_bits / 2, MPFR_RNDN);
  return mag;
}

}  // namespace circconj
