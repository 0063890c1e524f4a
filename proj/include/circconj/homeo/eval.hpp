#pragma once

#include <optional>

#include "circconj/homeo/expr.hpp"
#include "circconj/homeo/real.hpp"

namespace circconj {

/// A point of the line used as a lift of a circle point. `exact` holds the
/// rational value when it is known exactly; marked points j/k are recognized
/// from it without rounding.
struct LiftPoint {
  Real x;
  std::optional<Surd> exact;

  static LiftPoint rational(i64 num, i64 den, mpfr_prec_t bits);
  static LiftPoint approx(Real x);
  i64 floor() const;
  LiftPoint plus(i64 v) const;
  LiftPoint minus(const LiftPoint& o) const;
  /// Representative in [0, 1).
  LiftPoint frac() const;
};

/// Circle point e^{2 pi i t}, stored by its lift t in [0, 1).
using CirclePoint = LiftPoint;

/// Evaluates expressions at a fixed precision. Stateless apart from the
/// precision settings, so one instance may be shared across threads.
class Evaluator {
 public:
  explicit Evaluator(Precision p = {});

  const Precision& precision() const { return p_; }
  mpfr_prec_t bits() const { return static_cast<mpfr_prec_t>(p_.working_bits); }

  /// e^m (x) on the line.
  Real line(const Expr& e, const Real& x, i64 m = 1) const;
  /// e^m (x) for the canonical lift of a circle map (or a translation).
  LiftPoint lift(const Expr& e, const LiftPoint& x, i64 m = 1) const;
  /// e^m (t) on the circle, returned in [0, 1).
  CirclePoint circle(const Expr& e, const CirclePoint& t, i64 m = 1) const;

  /// The base map h and its inverse.
  Real h(const Real& x) const;
  Real h_inv(const Real& y) const;

 private:
  Real repeat_line(const Expr& e, Real x, i64 m) const;
  LiftPoint repeat_lift(const Expr& e, LiftPoint x, i64 m) const;
  LiftPoint extend_lift(const node::CircleExtend& n, const LiftPoint& x, i64 m) const;
  LiftPoint canonical_f_lift(const node::CanonicalF& n, const LiftPoint& x, bool inverse) const;
  LiftPoint retwist_lift(const node::Retwist& n, const LiftPoint& x, bool inverse) const;
  /// phi o g^m o phi^-1 on the first arc (1/k, 2/k).
  Real first_arc_map(const Expr& g, int k, const Real& y, i64 m) const;
  void check_cap(i64 m) const;

  Precision p_;
  Real pi_;
};

Real eval_line(const Expr& e, const Real& x, const Precision& p);
CirclePoint eval_circle(const Expr& e, const CirclePoint& t, const Precision& p);

struct RotationEstimate {
  Real value;
  std::optional<Surd> exact;
  double error_bound;
};

/// (F^iters(t0) - t0) / iters for the canonical lift F of e.
RotationEstimate rotation_number(const Expr& e, const CirclePoint& t0, i64 iters, const Precision& p);

/// Staircase(e) after sampling e for the precondition: e fixes each integer,
/// keeps every [i, i+1] and is increasing there. Throws DomainError otherwise.
Expr staircase(Expr e, const Precision& p = {});

}  // namespace circconj
