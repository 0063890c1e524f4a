#include <doctest.h>

#include <random>

#include "circconj/homeo/eval.hpp"
#include "test_support.hpp"

using namespace circconj;

using namespace testing_support;

namespace {

Expr random_affine(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> pos(1, 4);
  std::vector<Expr> items;
  for (int i = 0; i < 3; ++i) {
    switch (pick(rng)) {
      case 0:
        items.push_back(translate(Alpha{Surd::rational(small(rng), pos(rng))}));
        break;
      case 1:
        items.push_back(scale(Surd::rational(pos(rng), pos(rng))));
        break;
      default:
        items.push_back(translate(Alpha{sqrt2_minus_1() * Surd::integer(small(rng))}));
    }
  }
  return compose(items);
}

}  // namespace

TEST_CASE("eval_line examples") {
  Evaluator ev(kPrec);
  CHECK(close(ev.line(hbar_base(), num(0)), num(0.5)));
  for (int i = -3; i <= 3; ++i) CHECK(ev.line(hbar_wrap(translate(1)), Real(i, kBits)) == Real(i, kBits));
  CHECK(close(ev.line(hbar_wrap(translate(1)), num(0.5)), num(0.75)));
  CHECK(close(ev.line(hbar_iter(translate(1), 1), num(0.5)), num(0.75)));
  CHECK(close(ev.line(hbar_wrap(translate(1)), num(2.5)), num(2.75)));
}

TEST_CASE("hbar_iter is structural nesting") {
  CHECK(hbar_iter(translate(1), 0) == translate(1));
  CHECK(hbar_iter(translate(1), 2) == hbar_wrap(hbar_wrap(translate(1))));
  CHECK_THROWS_AS(hbar_wrap(canonical_f_expr(3, identity_expr())), DomainError);
}

TEST_CASE("points near an integer exhaust precision") {
  Evaluator ev(kPrec);
  Real x(1, kBits);
  mpfr_nextabove(x.get());
  CHECK_THROWS_AS(ev.line(hbar_wrap(translate(1)), x), PrecisionExhausted);
  CHECK_THROWS_AS(ev.line(hbar_base(), num(1.5), -1), DomainError);
}

TEST_CASE("power rewrites and the power cap") {
  Evaluator ev(kPrec);
  Expr e = hbar_wrap(translate(1));
  Real x = num(0.3);
  Real y = x;
  for (int i = 0; i < 5; ++i) y = ev.line(e, y);
  CHECK(close(ev.line(power(e, 5), x), y));
  CHECK(close(ev.line(power(translate(1), 1000), x), x + Real(1000, kBits)));
  Expr twisted = compose({hbar_wrap(translate(1)), hbar_wrap(scale(Surd::integer(2)))});
  CHECK_NOTHROW(ev.line(power(twisted, 64), x));
  CHECK_THROWS_AS(ev.line(power(twisted, 65), x), PowerCapExceeded);
  Expr commuting = compose({hbar_wrap(translate(1)), hbar_wrap(translate(Alpha{sqrt2_minus_1()}))}, true);
  CHECK_NOTHROW(ev.line(power(commuting, 500), x));
}

TEST_CASE("inverse contract on the line") {
  Evaluator ev(kPrec);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Expr e = hbar_iter(random_affine(rng), trial % 3);
    for (const Real& x : line_grid(-2, 2, 7)) {
      Real y = ev.line(e, ev.line(inverse(e), x));
      CHECK(close(y, x));
    }
  }
}

TEST_CASE("hbar is a homomorphism commuting with L1") {
  Evaluator ev(kPrec);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    Expr s1 = random_affine(rng);
    Expr s2 = random_affine(rng);
    Expr lhs = hbar_wrap(compose({s1, s2}));
    Expr rhs = compose({hbar_wrap(s1), hbar_wrap(s2)});
    Expr a = compose({hbar_wrap(s1), translate(1)});
    Expr b = compose({translate(1), hbar_wrap(s1)});
    for (const Real& x : line_grid(-3, 3, 9)) {
      CHECK(close(ev.line(lhs, x), ev.line(rhs, x)));
      CHECK(close(ev.line(a, x), ev.line(b, x)));
    }
  }
}

TEST_CASE("hbar iterates commute with iterated translations") {
  Evaluator ev(kPrec);
  std::mt19937 rng(5);
  Expr s = random_affine(rng);
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n < m; ++n)
      for (int k : {-3, -1, 2, 3}) {
        Expr a = hbar_iter(s, m);
        Expr b = hbar_iter(translate(k), n);
        for (const Real& x : line_grid(-2, 2, 5)) {
          Real ab = ev.line(compose({a, b}), x);
          Real ba = ev.line(compose({b, a}), x);
          CHECK(close(ab, ba));
        }
      }
}

TEST_CASE("monotonicity on a fine grid") {
  Evaluator ev(kPrec);
  std::mt19937 rng(3);
  for (int depth = 0; depth <= 2; ++depth) {
    Expr e = hbar_iter(random_affine(rng), depth);
    auto grid = line_grid(-2, 2, 40);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(ev.line(e, grid[i - 1]) < ev.line(e, grid[i]));
  }
}

TEST_CASE("staircase") {
  Evaluator ev(kPrec);
  Expr s = staircase(identity_expr());
  for (const Real& x : line_grid(-2, 2, 5)) CHECK(close(ev.line(s, x), x));
  Expr g0 = hbar_wrap(compose({translate(1), translate(Alpha{sqrt2_minus_1()})}, true));
  Expr st = staircase(g0);
  for (const Real& x : line_grid(0, 1, 9)) CHECK(ev.line(st, x) == x);
  Expr lhs = compose({st, translate(1), inverse(st)});
  Expr rhs = compose({g0, translate(1)});
  for (const Real& x : line_grid(-3, 3, 7)) CHECK(close(ev.line(lhs, x), ev.line(rhs, x)));
  CHECK_THROWS_AS(staircase(translate(1)), DomainError);
}

TEST_CASE("eval_circle examples") {
  Evaluator ev(kPrec);
  Expr g = translate(1);
  const int k = 4;
  Expr f = canonical_f_expr(k, g);
  Expr ext = circle_extend(scale(Surd::integer(3)), k, f);
  for (int j = 0; j < k; ++j) {
    CirclePoint p = LiftPoint::rational(j, k, kBits);
    CirclePoint q = ev.circle(ext, p);
    REQUIRE(q.exact);
    CHECK(*q.exact == Surd::rational(j, k));
  }
  CirclePoint q = ev.circle(f, LiftPoint::rational(1, 4, kBits));
  REQUIRE(q.exact);
  CHECK(*q.exact == Surd::rational(1, 2));
  q = ev.circle(f, LiftPoint::rational(3, 4, kBits));
  CHECK(*q.exact == Surd::integer(0));
  for (int s = 1; s < 40; ++s) {
    CirclePoint t = LiftPoint::approx(num((s + 0.37) / 40.0));
    CHECK(circ_dist(ev.circle(compose({ext, inverse(ext)}), t).x, t.x) < num(kPrec.eval_tolerance));
    CHECK(circ_dist(ev.circle(compose({f, inverse(f)}), t).x, t.x) < num(kPrec.eval_tolerance));
    CHECK(circ_dist(ev.circle(compose({inverse(f), f}), t).x, t.x) < num(kPrec.eval_tolerance));
  }
}

TEST_CASE("canonical f has f^k equal to the arc copy of g") {
  Evaluator ev(kPrec);
  for (int k : {1, 2, 3, 5}) {
    Expr g = compose({translate(1), translate(Alpha{sqrt2_minus_1()})}, true);
    Expr f = canonical_f_expr(k, g);
    for (int s = 1; s < 10; ++s) {
      // a point in the first arc (1/k, 2/k)
      Real y = num((1.0 + s / 10.0) / k);
      LiftPoint fk = ev.lift(f, LiftPoint::approx(y), k);
      Real s_line = ev.h_inv(y * Real(k, kBits) - Real(1, kBits));
      Real expect = (ev.h(ev.line(g, s_line)) + Real(1, kBits)) / Real(k, kBits);
      CHECK(close(fk.x, expect + Real(1, kBits)));
    }
  }
}

TEST_CASE("circle extension is an arcwise conjugate") {
  Evaluator ev(kPrec);
  const int k = 3;
  Expr f = canonical_f_expr(k, translate(Alpha{sqrt2_minus_1()}));
  Expr sigma = translate(Alpha{Surd::rational(1, 3)});
  Expr ext = circle_extend(sigma, k, f);
  // f commutes with extensions of maps commuting with g.
  Expr tau = translate(Alpha{sqrt2_minus_1()});
  Expr ext_tau = circle_extend(tau, k, f);
  for (int s = 1; s < 30; ++s) {
    CirclePoint t = LiftPoint::approx(num((s + 0.21) / 30.0));
    CHECK(circ_dist(ev.circle(compose({f, ext}), t).x, ev.circle(compose({ext, f}), t).x) < num(1e-15));
    CHECK(circ_dist(ev.circle(power(ext, 3), t).x, ev.circle(circle_extend(power(sigma, 3), k, f), t).x) <
          num(1e-15));
    CHECK(circ_dist(ev.circle(compose({ext_tau, circle_extend(power(tau, -1), k, f)}), t).x, t.x) < num(1e-15));
  }
}

TEST_CASE("rotation numbers") {
  Precision p = kPrec;
  auto r = rotation_number(translate(Alpha{Surd::rational(1, 3)}), LiftPoint::rational(0, 1, kBits), 9, p);
  REQUIRE(r.exact);
  CHECK(*r.exact == Surd::rational(1, 3));
  r = rotation_number(identity_expr(), LiftPoint::rational(1, 5, kBits), 10, p);
  REQUIRE(r.exact);
  CHECK(*r.exact == Surd::integer(0));
  for (int k : {2, 3, 4, 7}) {
    Expr f = canonical_f_expr(k, translate(Alpha{sqrt2_minus_1()}));
    auto est = rotation_number(f, LiftPoint::approx(num(0.123)), 50, p);
    CHECK(std::abs(est.value.to_double() - 1.0 / k) <= est.error_bound);
  }
}

TEST_CASE("domain checks") {
  Evaluator ev(kPrec);
  CHECK_THROWS_AS(ev.line(canonical_f_expr(2, identity_expr()), num(0.5)), DomainError);
  CHECK_THROWS_AS(ev.circle(scale(Surd::integer(2)), LiftPoint::approx(num(0.5))), DomainError);
  CHECK_THROWS_AS(compose({scale(Surd::integer(2)), canonical_f_expr(2, identity_expr())}), DomainError);
  CHECK_THROWS_AS(scale(Surd::integer(-1)), DomainError);
}
