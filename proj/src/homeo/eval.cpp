#include "circconj/homeo/eval.hpp"

#include <cstdlib>

namespace circconj {

namespace {

Real at_bits(const Real& x, mpfr_prec_t bits) {
  if (x.precision() >= bits) return x;
  Real r(bits);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real one_at(mpfr_prec_t bits) { return Real(1, bits); }

struct ArcPos {
  i64 j;  // floor(k t)
  bool marked;
};

// Position of t in [0, 1) relative to the marked points j/k.
ArcPos locate(int k, const LiftPoint& t, const Precision& p) {
  if (t.exact) {
    Surd kt = *t.exact * Surd::integer(k);
    return {kt.floor(), kt.is_integer()};
  }
  Real kt = t.x;
  kt.mul_int(k);
  i64 j = kt.floor_i64();
  Real f = kt;
  f.add_int(-j);
  if (f.is_zero()) return {j, true};
  Real res = p.resolution(kt);
  if (f < res || one_at(f.precision()) - f < res)
    throw PrecisionExhausted("circle point within resolution of a marked point: " + t.x.to_string(20));
  return {j, false};
}

LiftPoint shift(const LiftPoint& x, const Surd& q, mpfr_prec_t bits) {
  LiftPoint out{x.x + Real::from_surd(q, bits), std::nullopt};
  if (x.exact) out.exact = *x.exact + q;
  return out;
}

}  // namespace

LiftPoint LiftPoint::rational(i64 num, i64 den, mpfr_prec_t bits) {
  Surd q = Surd::rational(num, den);
  return {Real::from_surd(q, bits), q};
}

LiftPoint LiftPoint::approx(Real x) { return {std::move(x), std::nullopt}; }

i64 LiftPoint::floor() const { return exact ? exact->floor() : x.floor_i64(); }

LiftPoint LiftPoint::plus(i64 v) const {
  LiftPoint out = *this;
  out.x.add_int(v);
  if (out.exact) out.exact = *out.exact + Surd::integer(v);
  return out;
}

LiftPoint LiftPoint::minus(const LiftPoint& o) const {
  LiftPoint out{x - o.x, std::nullopt};
  if (exact && o.exact) out.exact = *exact - *o.exact;
  return out;
}

LiftPoint LiftPoint::frac() const { return plus(-floor()); }

Evaluator::Evaluator(Precision p) : p_(p), pi_(Real::pi(static_cast<mpfr_prec_t>(p.working_bits))) { p_.validate(); }

Real Evaluator::h(const Real& x) const {
  Real r = atan(at_bits(x, bits())) / pi_;
  return r + Real::rational(1, 2, bits());
}

Real Evaluator::h_inv(const Real& y) const {
  Real res = p_.resolution(y);
  Real one = one_at(bits());
  if (!(y > res) || !(one - y > res)) {
    if (y < -res || y > one + res) throw DomainError("inverse base map needs an argument in (0, 1), got " + y.to_string(20));
    throw PrecisionExhausted("inverse base map argument within resolution of 0 or 1: " + y.to_string(20));
  }
  Real a = at_bits(y, bits()) - Real::rational(1, 2, bits());
  return tan(a * pi_);
}

void Evaluator::check_cap(i64 m) const {
  if (m > p_.power_cap || m < -p_.power_cap)
    throw PowerCapExceeded("power " + std::to_string(m) + " exceeds the cap " + std::to_string(p_.power_cap));
}

Real Evaluator::repeat_line(const Expr& e, Real x, i64 m) const {
  check_cap(m);
  i64 step = m > 0 ? 1 : -1;
  for (i64 i = 0; i != m; i += step) x = line(e, x, step);
  return x;
}

LiftPoint Evaluator::repeat_lift(const Expr& e, LiftPoint x, i64 m) const {
  check_cap(m);
  i64 step = m > 0 ? 1 : -1;
  for (i64 i = 0; i != m; i += step) x = lift(e, x, step);
  return x;
}

Real Evaluator::line(const Expr& e, const Real& x, i64 m) const {
  if (m == 0) return x;
  return std::visit(
      [&](const auto& n) -> Real {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Identity>) {
          return x;
        } else if constexpr (std::is_same_v<T, node::Translate>) {
          Real a = Real::from_alpha(n.amount, bits());
          a.mul_int(m);
          return x + a;
        } else if constexpr (std::is_same_v<T, node::Scale>) {
          return x * pow_int(Real::from_surd(n.factor, bits()), m);
        } else if constexpr (std::is_same_v<T, node::HbarBase>) {
          if (m == 1) return h(x);
          if (m == -1) return h_inv(x);
          throw DomainError("the base map is not a self-map; only powers +-1 are defined");
        } else if constexpr (std::is_same_v<T, node::HbarWrap>) {
          if (x.is_integer()) return x;
          i64 i = x.floor_i64();
          Real f = x;
          f.add_int(-i);
          Real res = p_.resolution(x);
          if (f < res || one_at(f.precision()) - f < res)
            throw PrecisionExhausted("argument within resolution of an integer: " + x.to_string(30));
          Real r = h(line(n.inner, h_inv(f), m));
          if (!(r.sign() > 0 && r < one_at(r.precision())))
            throw PrecisionExhausted("wrapped value collapsed onto an integer near " + x.to_string(30));
          r.add_int(i);
          return r;
        } else if constexpr (std::is_same_v<T, node::Staircase>) {
          if (x.is_integer()) return x;
          return line(n.inner, x, checked_mul(m, x.floor_i64()));
        } else if constexpr (std::is_same_v<T, node::Compose>) {
          Real y = x;
          if (n.commuting) {
            for (auto it = n.items.rbegin(); it != n.items.rend(); ++it) y = line(*it, y, m);
          } else if (m == 1) {
            for (auto it = n.items.rbegin(); it != n.items.rend(); ++it) y = line(*it, y, 1);
          } else if (m == -1) {
            for (const Expr& item : n.items) y = line(item, y, -1);
          } else {
            y = repeat_line(e, y, m);
          }
          return y;
        } else if constexpr (std::is_same_v<T, node::Inverse>) {
          return line(n.inner, x, checked_mul(m, -1));
        } else if constexpr (std::is_same_v<T, node::Power>) {
          return line(n.inner, x, checked_mul(m, n.exponent));
        } else {
          throw DomainError("circle map evaluated on the line");
        }
      },
      e.node().value);
}

LiftPoint Evaluator::lift(const Expr& e, const LiftPoint& x, i64 m) const {
  if (m == 0) return x;
  return std::visit(
      [&](const auto& n) -> LiftPoint {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Identity>) {
          return x;
        } else if constexpr (std::is_same_v<T, node::Translate>) {
          const Surd* a = std::get_if<Surd>(&n.amount);
          if (a && a->is_rational() && x.exact) return shift(x, *a * Surd::integer(m), bits());
          Real amount = Real::from_alpha(n.amount, bits());
          amount.mul_int(m);
          return LiftPoint::approx(x.x + amount);
        } else if constexpr (std::is_same_v<T, node::CircleExtend>) {
          return extend_lift(n, x, m);
        } else if constexpr (std::is_same_v<T, node::CanonicalF>) {
          if (m == 1 || m == -1) return canonical_f_lift(n, x, m < 0);
          return repeat_lift(e, x, m);
        } else if constexpr (std::is_same_v<T, node::Retwist>) {
          if (m == 1 || m == -1) return retwist_lift(n, x, m < 0);
          return repeat_lift(e, x, m);
        } else if constexpr (std::is_same_v<T, node::Compose>) {
          LiftPoint y = x;
          if (n.commuting) {
            for (auto it = n.items.rbegin(); it != n.items.rend(); ++it) y = lift(*it, y, m);
          } else if (m == 1) {
            for (auto it = n.items.rbegin(); it != n.items.rend(); ++it) y = lift(*it, y, 1);
          } else if (m == -1) {
            for (const Expr& item : n.items) y = lift(item, y, -1);
          } else {
            y = repeat_lift(e, y, m);
          }
          return y;
        } else if constexpr (std::is_same_v<T, node::Inverse>) {
          return lift(n.inner, x, checked_mul(m, -1));
        } else if constexpr (std::is_same_v<T, node::Power>) {
          return lift(n.inner, x, checked_mul(m, n.exponent));
        } else {
          throw DomainError("line map evaluated on the circle");
        }
      },
      e.node().value);
}

CirclePoint Evaluator::circle(const Expr& e, const CirclePoint& t, i64 m) const { return lift(e, t, m).frac(); }

Real Evaluator::first_arc_map(const Expr& g, int k, const Real& y, i64 m) const {
  Real ky = at_bits(y, bits());
  ky.mul_int(k);
  ky.add_int(-1);
  Real s = line(g, h_inv(ky), m);
  Real out = h(s);
  out.add_int(1);
  return out / Real(k, bits());
}

LiftPoint Evaluator::canonical_f_lift(const node::CanonicalF& n, const LiftPoint& x, bool inverse) const {
  const int k = n.k;
  i64 base = x.floor();
  LiftPoint t = x.frac();
  ArcPos pos = locate(k, t, p_);
  if (pos.marked) return LiftPoint::rational(inverse ? pos.j - 1 : pos.j + 1, k, bits()).plus(base);
  Surd step = Surd::rational(1, k);
  if (!inverse) {
    if (pos.j != 0) return shift(t, step, bits()).plus(base);
    Real y = t.x + Real::from_surd(step, bits());
    Real out = first_arc_map(n.g, k, y, 1);
    out.add_int(base);
    return LiftPoint::approx(std::move(out));
  }
  if (k == 1 || pos.j == 1) {
    Real s = t.x;
    if (k == 1) {
      s.add_int(1);
      --base;
    }
    Real out = first_arc_map(n.g, k, s, -1) - Real::from_surd(step, bits());
    out.add_int(base);
    return LiftPoint::approx(std::move(out));
  }
  return shift(t, -step, bits()).plus(base);
}

LiftPoint Evaluator::extend_lift(const node::CircleExtend& n, const LiftPoint& x, i64 m) const {
  const int k = n.k;
  i64 base = x.floor();
  LiftPoint t = x.frac();
  ArcPos pos = locate(k, t, p_);
  if (pos.marked) return x;
  i64 shiftback = (pos.j == 0 ? k : pos.j) - 1;
  LiftPoint z = lift(n.f, t, -shiftback);
  // Representative of z in the first arc (1/k, 2/k).
  Real first = Real::rational(1, k, bits());
  Real zr = z.x - first;
  zr = zr - floor(zr) + first;
  Real w = first_arc_map(n.inner, k, zr, m);
  LiftPoint r = lift(n.f, LiftPoint::approx(std::move(w)), shiftback).frac();
  return r.plus(base);
}

LiftPoint Evaluator::retwist_lift(const node::Retwist& n, const LiftPoint& x, bool inverse) const {
  const Expr& outer = inverse ? n.fprime : n.f;
  const Expr& inner = inverse ? n.f : n.fprime;
  i64 base = x.floor();
  LiftPoint t = x.frac();
  ArcPos pos = locate(n.k, t, p_);
  if (pos.marked) return x;
  i64 shiftback = (pos.j == 0 ? n.k : pos.j) - 1;
  LiftPoint z = lift(inner, t, -shiftback);
  z.exact.reset();
  return lift(outer, z, shiftback).frac().plus(base);
}

Real eval_line(const Expr& e, const Real& x, const Precision& p) { return Evaluator(p).line(e, x); }

CirclePoint eval_circle(const Expr& e, const CirclePoint& t, const Precision& p) { return Evaluator(p).circle(e, t); }

RotationEstimate rotation_number(const Expr& e, const CirclePoint& t0, i64 iters, const Precision& p) {
  if (iters < 1) throw DomainError("rotation_number needs at least one iterate");
  Evaluator ev(p);
  LiftPoint x = t0;
  for (i64 i = 0; i < iters; ++i) x = ev.lift(e, x, 1);
  LiftPoint d = x.minus(t0);
  RotationEstimate out{d.x / Real(static_cast<long>(iters), ev.bits()), std::nullopt, 1.0 / static_cast<double>(iters)};
  if (d.exact) out.exact = *d.exact / Surd::integer(iters);
  return out;
}

Expr staircase(Expr e, const Precision& p) {
  Evaluator ev(p);
  const mpfr_prec_t bits = ev.bits();
  const Real tol = Real::from_double(p.eval_tolerance, bits);
  constexpr int kSamples = 16;
  for (i64 i = -2; i <= 2; ++i) {
    Real lo(static_cast<long>(i), bits);
    Real hi(static_cast<long>(i + 1), bits);
    if (abs(ev.line(e, lo) - lo) > tol) throw DomainError("staircase argument moves the integer " + std::to_string(i));
    Real prev = lo;
    for (int s = 1; s < kSamples; ++s) {
      Real x = lo + Real::rational(s, kSamples, bits);
      Real y(bits);
      try {
        y = ev.line(e, x);
      } catch (const PrecisionExhausted&) {
        continue;
      }
      if (!(y > lo && y < hi)) throw DomainError("staircase argument leaves [" + std::to_string(i) + ", " + std::to_string(i + 1) + "]");
      if (!(y > prev)) throw DomainError("staircase argument is not increasing");
      prev = y;
    }
  }
  return staircase_unchecked(std::move(e));
}

}  // namespace circconj
