#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "circconj/lineargroup/line_group.hpp"

namespace circconj {

/// Parameters of the circle group G_{alpha,n,k,g,f}: k marked points j/k,
/// the line group G_{alpha,n} acting on each arc, and the twist g with f^k = g-bar.
struct CircleGroupDescriptor {
  Alpha alpha;
  int n = 2;
  int k = 1;
  GroupVector g;

  LineGroupDescriptor line() const { return {alpha, n}; }
  friend bool operator==(const CircleGroupDescriptor&, const CircleGroupDescriptor&) = default;
};

/// Rejection reason, or nullopt when the descriptor is valid. The torsion
/// condition is gcd(content(g), k) = 1.
std::optional<std::string> validate_g(const CircleGroupDescriptor& d);
/// Throws DomainError with the rejection reason.
void require_valid(const CircleGroupDescriptor& d);

/// Direct membership test g in G^s = { x^s : x in G_{alpha,n} } by searching
/// for a root x with s x = g coordinatewise.
bool in_power_subgroup(const GroupVector& g, i64 s);

/// f^j o h-bar in normal form, 0 <= j < k.
struct CircleElement {
  i64 j = 0;
  GroupVector h;
  friend bool operator==(const CircleElement&, const CircleElement&) = default;
};

CircleElement circle_identity(const CircleGroupDescriptor& d);
CircleElement circle_multiply(const CircleGroupDescriptor& d, const CircleElement& a, const CircleElement& b);
CircleElement circle_power(const CircleGroupDescriptor& d, const CircleElement& a, i64 m);
CircleElement circle_inverse(const CircleGroupDescriptor& d, const CircleElement& a);

Expr canonical_f(const CircleGroupDescriptor& d);
/// The bar extension of element_to_expr(v) with respect to canonical_f(d).
Expr bar_extend(const CircleGroupDescriptor& d, const GroupVector& v);
Expr element_expr(const CircleGroupDescriptor& d, const CircleElement& e);

/// The marked points j/k as exact lift points.
std::vector<CirclePoint> finite_orbit(const CircleGroupDescriptor& d, const Precision& p = {});

struct OrbitSample {
  std::vector<CirclePoint> points;  // t0 first
  double max_gap = 1.0;
};

/// Applies n_samples pseudo-random elements f^j h-bar to t0 and reports the
/// largest circular gap. j is uniform in [0, k). The first pair of coordinates
/// is drawn so that the innermost chart coordinate of t0 moved by
/// h_1 + h_2 alpha lands near a Cauchy(0, coord_scale) value, with h_2 uniform
/// in [-coord_range, coord_range]. Each outer coordinate moves its own chart
/// coordinate of t0 to a rounded Cauchy value.
OrbitSample orbit_sample(const CircleGroupDescriptor& d, const CirclePoint& t0, std::size_t n_samples,
                         std::uint64_t seed, const Precision& p = {}, double coord_scale = 1.0,
                         i64 coord_range = 1000);

/// Largest gap between consecutive points of a finite subset of the circle.
double max_circular_gap(std::vector<double> ts);

}  // namespace circconj
