#include "circconj/circlegroup/circle_group.hpp"

#include <algorithm>
#include <random>

namespace circconj {

std::optional<std::string> validate_g(const CircleGroupDescriptor& d) {
  try {
    d.line().validate();
  } catch (const DomainError& e) {
    return std::string(e.what());
  }
  if (d.k < 1) return "k must be a positive integer, got " + std::to_string(d.k);
  if (d.g.size() != static_cast<std::size_t>(d.n))
    return "g has " + std::to_string(d.g.size()) + " coordinates, expected n = " + std::to_string(d.n);
  i64 c = content(d.g);
  i64 common = gcd(c, d.k);
  if (common != 1)
    return "torsion condition fails: gcd(content(g), k) = gcd(" + std::to_string(c) + ", " + std::to_string(d.k) +
           ") = " + std::to_string(common) + ", so g lies in G^s for s = " + std::to_string(common) +
           " and the group would contain torsion";
  return std::nullopt;
}

void require_valid(const CircleGroupDescriptor& d) {
  if (auto reason = validate_g(d)) throw DomainError(*reason);
}

bool in_power_subgroup(const GroupVector& g, i64 s) {
  for (i64 gi : g) {
    bool found = false;
    for (i64 x = -std::abs(gi); x <= std::abs(gi) && !found; ++x) found = checked_mul(s, x) == gi;
    if (!found) return false;
  }
  return true;
}

CircleElement circle_identity(const CircleGroupDescriptor& d) {
  return {0, GroupVector(static_cast<std::size_t>(d.n), 0)};
}

CircleElement circle_multiply(const CircleGroupDescriptor& d, const CircleElement& a, const CircleElement& b) {
  i64 j = checked_add(a.j, b.j);
  GroupVector h = vec_add(vec_add(a.h, b.h), vec_scale(d.g, floor_div(j, d.k)));
  return {mod(j, d.k), std::move(h)};
}

CircleElement circle_power(const CircleGroupDescriptor& d, const CircleElement& a, i64 m) {
  i64 jm = checked_mul(a.j, m);
  GroupVector h = vec_add(vec_scale(a.h, m), vec_scale(d.g, floor_div(jm, d.k)));
  return {mod(jm, d.k), std::move(h)};
}

CircleElement circle_inverse(const CircleGroupDescriptor& d, const CircleElement& a) { return circle_power(d, a, -1); }

Expr canonical_f(const CircleGroupDescriptor& d) {
  require_valid(d);
  return canonical_f_expr(d.k, element_to_expr(d.line(), d.g));
}

Expr bar_extend(const CircleGroupDescriptor& d, const GroupVector& v) {
  require_valid(d);
  if (is_zero(v)) {
    if (v.size() != static_cast<std::size_t>(d.n)) throw DomainError("group vector has the wrong length");
    return identity_expr();
  }
  return circle_extend(element_to_expr(d.line(), v), d.k, canonical_f(d));
}

Expr element_expr(const CircleGroupDescriptor& d, const CircleElement& e) {
  require_valid(d);
  if (e.j < 0 || e.j >= d.k) throw DomainError("f-power index must lie in [0, k)");
  std::vector<Expr> parts;
  if (e.j > 0) {
    Expr f = canonical_f(d);
    parts.push_back(e.j == 1 ? f : power(f, e.j));
  }
  if (!is_zero(e.h)) parts.push_back(bar_extend(d, e.h));
  if (parts.empty()) return identity_expr();
  if (parts.size() == 1) return parts.front();
  return compose(std::move(parts));
}

std::vector<CirclePoint> finite_orbit(const CircleGroupDescriptor& d, const Precision& p) {
  require_valid(d);
  std::vector<CirclePoint> out;
  for (int j = 0; j < d.k; ++j) out.push_back(LiftPoint::rational(j, d.k, static_cast<mpfr_prec_t>(p.working_bits)));
  return out;
}

double max_circular_gap(std::vector<double> ts) {
  if (ts.empty()) return 1.0;
  for (double& t : ts) t -= std::floor(t);
  std::sort(ts.begin(), ts.end());
  double gap = 1.0 - ts.back() + ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) gap = std::max(gap, ts[i] - ts[i - 1]);
  return gap;
}

namespace {

// Chart coordinates of a non-marked point at each nesting depth: entry 0 is the
// line coordinate on the first arc, entry m is h^-1 of the fractional part of
// entry m - 1.
std::vector<double> chart_levels(const CircleGroupDescriptor& d, const Evaluator& ev, const CirclePoint& t) {
  i64 j = static_cast<i64>(std::floor(t.x.to_double() * d.k));
  i64 arc = j == 0 ? d.k : j;
  CirclePoint y = arc == 1 ? t : ev.circle(power(canonical_f(d), -(arc - 1)), t);
  Real ky = y.x * Real(d.k, ev.bits());
  Real x = ev.h_inv(ky - floor(ky));
  std::vector<double> out{x.to_double()};
  for (int depth = 1; depth <= d.n - 2; ++depth) {
    x = ev.h_inv(x - floor(x));
    out.push_back(x.to_double());
  }
  return out;
}

}  // namespace

OrbitSample orbit_sample(const CircleGroupDescriptor& d, const CirclePoint& t0, std::size_t n_samples,
                         std::uint64_t seed, const Precision& p, double coord_scale, i64 coord_range) {
  require_valid(d);
  Evaluator ev(p);
  CirclePoint start = t0.frac();
  if (start.exact) {
    Surd kt = *start.exact * Surd::integer(d.k);
    if (kt.is_integer()) throw DomainError("orbit start point is a marked point");
  }
  const double alpha = Real::from_alpha(d.alpha, 64).to_double();
  const std::vector<double> levels = chart_levels(d, ev, start);
  const double pair_level = levels.back();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> pick_j(0, d.k - 1);
  std::uniform_int_distribution<i64> pick_b(-coord_range, coord_range);
  std::cauchy_distribution<double> spread(0.0, coord_scale);
  const double cap = 1e12;
  auto cauchy = [&] { return std::clamp(spread(rng), -cap, cap); };
  OrbitSample out;
  out.points.push_back(start);
  for (std::size_t s = 0; s < n_samples; ++s) {
    CircleElement e{pick_j(rng), GroupVector(static_cast<std::size_t>(d.n))};
    i64 b = pick_b(rng);
    e.h[1] = b;
    e.h[0] = static_cast<i64>(std::llround(cauchy() - pair_level - static_cast<double>(b) * alpha));
    for (int i = 3; i <= d.n; ++i)
      e.h[static_cast<std::size_t>(i - 1)] = static_cast<i64>(std::llround(cauchy() - levels[static_cast<std::size_t>(d.n - i)]));
    out.points.push_back(ev.circle(element_expr(d, e), start));
  }
  std::vector<double> ts;
  ts.reserve(out.points.size());
  for (const auto& pt : out.points) ts.push_back(pt.x.to_double());
  out.max_gap = max_circular_gap(std::move(ts));
  return out;
}

}  // namespace circconj
