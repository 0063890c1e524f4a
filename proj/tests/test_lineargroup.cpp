#include <doctest.h>

#include <algorithm>
#include <random>

#include "circconj/lineargroup/normalizer.hpp"
#include "test_support.hpp"

using namespace circconj;
using namespace testing_support;

namespace {

LineGroupDescriptor group(int n) { return {Alpha{sqrt2_minus_1()}, n}; }

GroupVector random_vector(std::mt19937& rng, int n, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  GroupVector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = dist(rng);
  return v;
}

StructuredMatrix random_normalizer(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> power_pick(-1, 1);
  StructuredMatrix m = StructuredMatrix::identity(n);
  m.f_alpha = sign_normalized(power(UnimodularMatrix2{2, 1, 1, 0}, power_pick(rng)), sqrt2_minus_1());
  for (auto& row : m.S)
    for (auto& x : row) x = small(rng);
  for (std::size_t i = 0; i < m.B.size(); ++i)
    for (std::size_t j = i + 1; j < m.B.size(); ++j) m.B[i][j] = small(rng);
  return m;
}

IntVector column(const IntMatrix& m, std::size_t j) {
  IntVector c;
  for (const auto& row : m) c.push_back(row[j]);
  return c;
}

}  // namespace

TEST_CASE("element_to_expr examples") {
  CHECK(element_to_expr(group(2), {1, 0}) == translate(1));
  CHECK(element_to_expr(group(3), {0, 0, 0}) == identity_expr());
  CHECK(element_to_expr(group(4), {0, 0, 0, 0}) == identity_expr());
  CHECK(element_to_expr(group(3), {0, 0, 1}) == translate(1));
  CHECK(element_to_expr(group(3), {1, 0, 0}) == hbar_wrap(translate(1)));
  CHECK(element_to_expr(group(3), {0, 2, 0}) == power(hbar_wrap(translate(Alpha{sqrt2_minus_1()})), 2));
  CHECK_THROWS_AS(element_to_expr(group(3), {1, 0}), DomainError);
}

TEST_CASE("descriptor validation") {
  CHECK_NOTHROW(group(2).validate());
  CHECK_THROWS_AS((LineGroupDescriptor{Alpha{Surd(1, 1, 1, 2)}, 2}.validate()), DomainError);
  CHECK_THROWS_AS((LineGroupDescriptor{Alpha{Surd::rational(1, 2)}, 2}.validate()), DomainError);
  CHECK_THROWS_AS((LineGroupDescriptor{Alpha{sqrt2_minus_1()}, 1}.validate()), DomainError);
  CHECK_NOTHROW((LineGroupDescriptor{Alpha{CfPrefix{{0, 1, 2, 3, 4}}}, 3}.validate()));
}

TEST_CASE("nontransitive points") {
  CHECK(nontransitive_points(group(2), 5).empty());
  auto pts = nontransitive_points(group(3), 2);
  REQUIRE(pts.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(pts[static_cast<std::size_t>(i)].value == Real(i - 2, kBits));
  pts = nontransitive_points(group(4), 0);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].value == Real(0, kBits));
  CHECK(close(pts[1].value, num(0.5), 1e-30));
  CHECK(pts[1].index == std::vector<i64>{0, 0});
  // Recursive form at n = 5 also contains the depth-4 points.
  pts = nontransitive_points(group(5), 1);
  CHECK(pts.size() == 3 + 9 + 27);
}

TEST_CASE("minimal intervals") {
  auto [a2, b2] = minimal_interval(group(2), {});
  CHECK_FALSE(a2.is_finite());
  CHECK(a2.sign() < 0);
  CHECK(b2.sign() > 0);
  auto [a3, b3] = minimal_interval(group(3), {0});
  CHECK(a3 == Real(0, kBits));
  CHECK(b3 == Real(1, kBits));
  auto [a4, b4] = minimal_interval(group(4), {0, 0});
  CHECK(close(a4, num(0.5), 1e-60));
  CHECK(close(b4, num(0.75), 1e-60));
  CHECK_THROWS_AS(minimal_interval(group(4), {0}), DomainError);
}

TEST_CASE("group law in coordinates") {
  Evaluator ev(kPrec);
  std::mt19937 rng(17);
  for (int n = 2; n <= 4; ++n) {
    auto d = group(n);
    for (int trial = 0; trial < 6; ++trial) {
      GroupVector u = random_vector(rng, n, 3);
      GroupVector v = random_vector(rng, n, 3);
      Expr eu = element_to_expr(d, u), evv = element_to_expr(d, v), esum = element_to_expr(d, vec_add(u, v));
      for (const Real& x : line_grid(-2, 2, 6)) {
        Real uv = ev.line(compose({eu, evv}), x);
        Real vu = ev.line(compose({evv, eu}), x);
        CHECK(close(uv, vu));
        CHECK(close(uv, ev.line(esum, x)));
      }
    }
  }
}

TEST_CASE("faithfulness evidence") {
  Evaluator ev(kPrec);
  auto grid = line_grid(-2, 2, 5);
  const Real threshold = num(10 * kPrec.eval_tolerance);
  for (int n : {2, 3}) {
    auto d = group(n);
    GroupVector v(static_cast<std::size_t>(n), -3);
    while (true) {
      if (!is_zero(v)) {
        Expr e = element_to_expr(d, v);
        bool moves = std::any_of(grid.begin(), grid.end(), [&](const Real& x) { return abs(ev.line(e, x) - x) > threshold; });
        CHECK(moves);
      }
      std::size_t i = 0;
      while (i < v.size() && v[i] == 3) v[i++] = -3;
      if (i == v.size()) break;
      ++v[i];
    }
  }
}

TEST_CASE("minimal interval is stabilized by <e1, e2>") {
  Evaluator ev(kPrec);
  std::mt19937 rng(23);
  for (int n : {3, 4}) {
    auto d = group(n);
    auto [a, b] = minimal_interval(d, std::vector<i64>(static_cast<std::size_t>(n - 2), 0));
    Real width = b - a;
    for (int trial = 0; trial < 10; ++trial) {
      GroupVector v = random_vector(rng, n, 3);
      for (std::size_t i = 2; i < v.size(); ++i) v[i] = 0;
      Expr e = element_to_expr(d, v);
      for (double s : {0.13, 0.5, 0.87}) {
        Real x = a + width * num(s);
        Real y = ev.line(e, x);
        CHECK((y > a && y < b));
      }
    }
    for (int i = 3; i <= n; ++i) {
      GroupVector v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i - 1)] = (i % 2 == 0) ? 1 : -1;
      Real y = ev.line(element_to_expr(d, v), a + width * num(0.5));
      CHECK((y < a || y > b));
    }
  }
}

TEST_CASE("orbit gaps shrink inside the minimal interval") {
  Evaluator ev(kPrec);
  auto d = group(3);
  auto gap_for = [&](int radius) {
    std::vector<double> pts;
    for (int a = -radius; a <= radius; ++a)
      for (int b = -radius; b <= radius; ++b) pts.push_back(ev.line(element_to_expr(d, {a, b, 0}), num(0.5)).to_double());
    pts.push_back(0.0);
    pts.push_back(1.0);
    std::sort(pts.begin(), pts.end());
    double gap = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) gap = std::max(gap, pts[i] - pts[i - 1]);
    return gap;
  };
  double g1 = gap_for(15);  // about 10^3 elements
  double g2 = gap_for(50);  // about 10^4 elements
  CHECK(g2 < g1);
  CHECK(g2 < 0.01);
}

TEST_CASE("normalizer examples") {
  Evaluator ev(kPrec);
  CHECK(normalizer_expr(group(3), StructuredMatrix::identity(3)) == identity_expr());

  StructuredMatrix m = StructuredMatrix::identity(2);
  m.f_alpha = {2, 1, 1, 0};
  Expr phi = normalizer_expr(group(2), m);
  CHECK(phi == scale(Surd(1, 1, 1, 2)));
  Expr lhs = compose({phi, translate(1), inverse(phi)});
  Expr rhs = element_to_expr(group(2), {2, 1});
  for (const Real& x : line_grid(-3, 3, 5)) CHECK(close(ev.line(lhs, x), ev.line(rhs, x)));

  StructuredMatrix m3 = StructuredMatrix::identity(3);
  m3.S = {{2}, {-1}};
  phi = normalizer_expr(group(3), m3);
  CHECK(phi == staircase_unchecked(hbar_wrap(element_to_expr(group(2), {2, -1}))));
  lhs = compose({phi, translate(1), inverse(phi)});
  rhs = compose({hbar_wrap(element_to_expr(group(2), {2, -1})), translate(1)});
  for (const Real& x : line_grid(-3, 3, 5)) CHECK(close(ev.line(lhs, x), ev.line(rhs, x)));

  StructuredMatrix bad = StructuredMatrix::identity(2);
  bad.f_alpha = {1, 1, 1, 0};
  CHECK_THROWS_AS(normalizer_expr(group(2), bad), DomainError);
  bad = StructuredMatrix::identity(3);
  bad.B = {{2}};
  CHECK_THROWS_AS(normalizer_expr(group(3), bad), DomainError);
}

TEST_CASE("normalizer realizes its matrix on the basis") {
  Evaluator ev(kPrec);
  std::mt19937 rng(31);
  for (int n = 2; n <= 4; ++n) {
    auto d = group(n);
    for (int trial = 0; trial < 4; ++trial) {
      StructuredMatrix m = random_normalizer(rng, n);
      Expr phi = normalizer_expr(d, m);
      IntMatrix full = m.assembled();
      for (int j = 1; j <= n; ++j) {
        Expr lhs = compose({phi, basis_element(d, j), inverse(phi)});
        Expr rhs = element_to_expr(d, column(full, static_cast<std::size_t>(j - 1)));
        for (const Real& x : line_grid(-2, 2, 4)) CHECK(close(ev.line(lhs, x), ev.line(rhs, x), 1e-12));
      }
    }
  }
}

TEST_CASE("standard conjugation between equivalent parameters") {
  Evaluator ev(kPrec);
  Surd a = sqrt2_minus_1();
  Surd a2(0, 1, 2, 2);  // sqrt(2) / 2
  for (int n : {2, 3}) {
    LineGroupDescriptor from{Alpha{a}, n}, to{Alpha{a2}, n};
    StructuredMatrix m = StructuredMatrix::identity(n);
    m.A = *equivalent(a2, a);
    Expr phi = conjugation_expr(from, to, m);
    IntMatrix full = m.assembled();
    for (int j = 1; j <= n; ++j) {
      Expr lhs = compose({phi, basis_element(from, j), inverse(phi)});
      Expr rhs = element_to_expr(to, column(full, static_cast<std::size_t>(j - 1)));
      for (const Real& x : line_grid(-2, 2, 4)) CHECK(close(ev.line(lhs, x), ev.line(rhs, x), 1e-12));
    }
  }
}
