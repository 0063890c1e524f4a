#include <doctest.h>

#include <random>

#include "circconj/circlegroup/circle_group.hpp"
#include "test_support.hpp"

using namespace circconj;
using namespace testing_support;

namespace {

CircleGroupDescriptor desc(int n, int k, GroupVector g) { return {Alpha{sqrt2_minus_1()}, n, k, std::move(g)}; }

std::vector<CirclePoint> circle_grid(int k, int count) {
  std::vector<CirclePoint> out;
  for (int s = 0; s < count; ++s) {
    double t = (s + 0.4142) / count;
    double kt = t * k;
    if (std::abs(kt - std::round(kt)) / k < kPrec.delta) continue;
    out.push_back(LiftPoint::approx(num(t)));
  }
  return out;
}

bool same_point(const CirclePoint& a, const CirclePoint& b, double tol = 1e-12) {
  return circ_dist(a.x, b.x) < num(tol);
}

}  // namespace

TEST_CASE("validate_g examples") {
  CHECK_FALSE(validate_g(desc(2, 2, {1, 0})));
  auto reason = validate_g(desc(2, 2, {2, 2}));
  REQUIRE(reason);
  CHECK(reason->find("gcd") != std::string::npos);
  CHECK_FALSE(validate_g(desc(2, 1, {0, 0})));
  CHECK_FALSE(validate_g(desc(3, 1, {4, 6, 8})));
  CHECK(validate_g(desc(2, 3, {0, 0})));
  CHECK(validate_g(desc(2, 2, {1, 0, 0})));
  CHECK(validate_g(desc(2, 0, {1, 0})));
}

TEST_CASE("torsion reduction agrees with direct membership") {
  for (int n : {2, 3})
    for (int k = 1; k <= 6; ++k) {
      GroupVector g(static_cast<std::size_t>(n), -3);
      while (true) {
        bool direct_ok = true;
        for (i64 s = 0; s <= 20; ++s)
          if (gcd(k, s) != 1 && in_power_subgroup(g, s)) direct_ok = false;
        CHECK(direct_ok == !validate_g(desc(n, k, g)).has_value());
        std::size_t i = 0;
        while (i < g.size() && g[i] == 3) g[i++] = -3;
        if (i == g.size()) break;
        ++g[i];
      }
    }
}

TEST_CASE("canonical f moves marked points one step") {
  Evaluator ev(kPrec);
  for (int k = 1; k <= 5; ++k) {
    auto d = desc(2, k, {1, 0});
    Expr f = canonical_f(d);
    for (int j = 0; j < k; ++j) {
      CirclePoint q = ev.circle(f, LiftPoint::rational(j, k, kBits));
      REQUIRE(q.exact);
      CHECK(*q.exact == Surd::rational((j + 1) % k, k));
    }
  }
}

TEST_CASE("f^k equals the transplant of g on the first arc") {
  Evaluator ev(kPrec);
  for (int k : {1, 2, 4}) {
    auto d = desc(3, k, {1, -1, 1});
    Expr f = canonical_f(d);
    Expr gbar = bar_extend(d, d.g);
    for (int s = 1; s < 20; ++s) {
      CirclePoint t = LiftPoint::approx(num((1.0 + (s + 0.31) / 20.0) / k));
      CHECK(same_point(ev.circle(power(f, k), t), ev.circle(gbar, t)));
    }
  }
}

TEST_CASE("bar extension") {
  Evaluator ev(kPrec);
  auto d = desc(2, 3, {1, 1});
  CHECK(bar_extend(d, {0, 0}) == identity_expr());
  Expr b = bar_extend(d, {2, -1});
  for (int j = 0; j < 3; ++j) {
    CirclePoint q = ev.circle(b, LiftPoint::rational(j, 3, kBits));
    REQUIRE(q.exact);
    CHECK(*q.exact == Surd::rational(j, 3));
  }
  Expr sigma = element_to_expr(d.line(), {2, -1});
  for (int s = 1; s < 15; ++s) {
    Real y = num((1.0 + (s + 0.27) / 15.0) / 3);
    Real s_line = ev.h_inv(y * Real(3, kBits) - Real(1, kBits));
    Real direct = (ev.h(ev.line(sigma, s_line)) + Real(1, kBits)) / Real(3, kBits);
    CHECK(close(ev.circle(b, LiftPoint::approx(y)).x, direct, 1e-15));
  }
}

TEST_CASE("bar extensions commute with f and preserve arcs") {
  Evaluator ev(kPrec);
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int n : {2, 3})
    for (int k : {2, 3}) {
      GroupVector g(static_cast<std::size_t>(n), 0);
      g[0] = 1;
      auto d = desc(n, k, g);
      Expr f = canonical_f(d);
      for (int trial = 0; trial < 3; ++trial) {
        GroupVector v(static_cast<std::size_t>(n));
        for (auto& x : v) x = dist(rng);
        Expr b = bar_extend(d, v);
        for (const auto& t : circle_grid(k, 24)) {
          CHECK(same_point(ev.circle(compose({f, b}), t), ev.circle(compose({b, f}), t)));
          CirclePoint y = ev.circle(b, t);
          CHECK(static_cast<int>(std::floor(t.x.to_double() * k)) == static_cast<int>(std::floor(y.x.to_double() * k)));
        }
      }
    }
}

TEST_CASE("element_expr examples and the composition law") {
  Evaluator ev(kPrec);
  auto d = desc(2, 3, {1, 1});
  CHECK(element_expr(d, circle_identity(d)) == identity_expr());
  CirclePoint q = ev.circle(element_expr(d, {1, {0, 0}}), LiftPoint::rational(0, 1, kBits));
  REQUIRE(q.exact);
  CHECK(*q.exact == Surd::rational(1, 3));
  CHECK_THROWS_AS(element_expr(d, {3, {0, 0}}), DomainError);

  std::mt19937 rng(43);
  std::uniform_int_distribution<int> pick_j(0, 2);
  std::uniform_int_distribution<int> pick_h(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    CircleElement a{pick_j(rng), {pick_h(rng), pick_h(rng)}};
    CircleElement b{pick_j(rng), {pick_h(rng), pick_h(rng)}};
    CHECK(circle_multiply(d, a, b) == circle_multiply(d, b, a));
    Expr ab = element_expr(d, circle_multiply(d, a, b));
    Expr composed = compose({element_expr(d, a), element_expr(d, b)});
    Expr swapped = compose({element_expr(d, b), element_expr(d, a)});
    for (const auto& t : circle_grid(3, 20)) {
      CHECK(same_point(ev.circle(composed, t), ev.circle(ab, t)));
      CHECK(same_point(ev.circle(swapped, t), ev.circle(ab, t)));
    }
  }
}

TEST_CASE("normal form power and inverse") {
  auto d = desc(3, 4, {1, 2, 3});
  CircleElement a{3, {1, 0, -1}};
  CircleElement acc = circle_identity(d);
  for (int m = 1; m <= 9; ++m) {
    acc = circle_multiply(d, acc, a);
    CHECK(circle_power(d, a, m) == acc);
  }
  CHECK(circle_multiply(d, a, circle_inverse(d, a)) == circle_identity(d));
  CHECK(circle_power(d, a, -3) == circle_inverse(d, circle_power(d, a, 3)));
  CHECK(circle_power(d, {1, {0, 0, 0}}, 4) == CircleElement{0, d.g});
}

TEST_CASE("no torsion at desk scale") {
  for (int k : {2, 3, 4}) {
    auto d = desc(2, k, {1, 0});
    for (i64 j = 1; j < k; ++j)
      for (i64 h1 = -2; h1 <= 2; ++h1)
        for (i64 h2 = -2; h2 <= 2; ++h2)
          for (i64 m = 1; m <= 4 * k; ++m) CHECK_FALSE(circle_power(d, {j, {h1, h2}}, m) == circle_identity(d));
  }
}

TEST_CASE("coset structure: j = 0 keeps the first arc, j != 0 moves it") {
  Evaluator ev(kPrec);
  auto d = desc(2, 4, {1, 0});
  CirclePoint mid = LiftPoint::approx(num(1.5 / 4));
  for (i64 j = 0; j < 4; ++j) {
    CirclePoint y = ev.circle(element_expr(d, {j, {1, -1}}), mid);
    CHECK(static_cast<i64>(std::floor(y.x.to_double() * 4)) == (1 + j) % 4);
  }
}

TEST_CASE("rotation number of canonical f") {
  for (int k : {1, 2, 3}) {
    auto d = desc(2, k, {1, 0});
    auto r = rotation_number(canonical_f(d), LiftPoint::approx(num(0.2345)), 300, kPrec);
    CHECK(std::abs(r.value.to_double() - 1.0 / k) <= r.error_bound);
  }
}

TEST_CASE("finite orbit and its invariance") {
  Evaluator ev(kPrec);
  auto d = desc(3, 3, {1, 0, 1});
  auto orbit = finite_orbit(d);
  REQUIRE(orbit.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(*orbit[static_cast<std::size_t>(j)].exact == Surd::rational(j, 3));
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> pick_j(0, 2);
  std::uniform_int_distribution<int> pick_h(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    CircleElement e{pick_j(rng), {pick_h(rng), pick_h(rng), pick_h(rng)}};
    for (const auto& x : orbit) {
      CirclePoint y = ev.circle(element_expr(d, e), x);
      REQUIRE(y.exact);
      CHECK((*y.exact * Surd::integer(3)).is_integer());
    }
  }
}

TEST_CASE("orbit sampling") {
  auto d = desc(2, 1, {1, 0});
  auto empty = orbit_sample(d, LiftPoint::approx(num(0.3)), 0, 1);
  CHECK(empty.points.size() == 1);
  auto dense = orbit_sample(d, LiftPoint::approx(num(0.3)), 10000, 2024);
  CHECK(dense.points.size() == 10001);
  CHECK(dense.max_gap < 0.01);
  auto again = orbit_sample(d, LiftPoint::approx(num(0.3)), 50, 7);
  auto twice = orbit_sample(d, LiftPoint::approx(num(0.3)), 50, 7);
  for (std::size_t i = 0; i < again.points.size(); ++i) CHECK(again.points[i].x == twice.points[i].x);
  CHECK_THROWS_AS(orbit_sample(desc(2, 3, {1, 0}), LiftPoint::rational(1, 3, kBits), 5, 1), DomainError);
  CHECK(max_circular_gap({0.1, 0.4}) == doctest::Approx(0.7));
}
