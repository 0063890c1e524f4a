#include "circconj/lineargroup/line_group.hpp"

#include <algorithm>

namespace circconj {

void LineGroupDescriptor::validate() const {
  if (n < 2) throw DomainError("rank n must be at least 2, got " + std::to_string(n));
  if (const Surd* s = std::get_if<Surd>(&alpha)) {
    if (s->is_rational()) throw DomainError("alpha must be irrational, got " + s->to_string());
  }
  if (!in_unit_interval(alpha)) throw DomainError("alpha must lie in (0, 1)");
}

Expr basis_element(const LineGroupDescriptor& d, int i) {
  if (i < 1 || i > d.n) throw DomainError("basis index " + std::to_string(i) + " out of range");
  if (i == 1) return hbar_iter(translate(1), d.n - 2);
  if (i == 2) return hbar_iter(translate(d.alpha), d.n - 2);
  return hbar_iter(translate(1), d.n - i);
}

Expr element_to_expr(const LineGroupDescriptor& d, const GroupVector& v) {
  if (v.size() != static_cast<std::size_t>(d.n))
    throw DomainError("group vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(d.n));
  std::vector<Expr> factors;
  for (int i = 1; i <= d.n; ++i) {
    i64 e = v[static_cast<std::size_t>(i - 1)];
    if (e == 0) continue;
    Expr b = basis_element(d, i);
    factors.push_back(e == 1 ? b : power(b, e));
  }
  if (factors.empty()) return identity_expr();
  if (factors.size() == 1) return factors.front();
  return compose(std::move(factors), true);
}

std::vector<NontransitivePoint> nontransitive_points(const LineGroupDescriptor& d, i64 bound, const Precision& p) {
  if (d.n < 2) throw DomainError("rank n must be at least 2");
  if (bound < 0) throw DomainError("bound must be non-negative");
  std::vector<NontransitivePoint> out;
  if (d.n == 2) return out;
  Evaluator ev(p);
  // level[m] holds the points first created at nesting depth m.
  std::vector<NontransitivePoint> level;
  for (i64 i = -bound; i <= bound; ++i) level.push_back({Real(static_cast<long>(i), ev.bits()), {i}});
  out = level;
  for (int depth = 4; depth <= d.n; ++depth) {
    std::vector<NontransitivePoint> next;
    for (const auto& pt : level) {
      Real y = ev.h(pt.value);
      for (i64 i = -bound; i <= bound; ++i) {
        Real v = y;
        v.add_int(i);
        std::vector<i64> idx = pt.index;
        idx.push_back(i);
        next.push_back({std::move(v), std::move(idx)});
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::pair<Real, Real> minimal_interval(const LineGroupDescriptor& d, const std::vector<i64>& idx, const Precision& p) {
  Evaluator ev(p);
  if (d.n == 2) {
    if (!idx.empty()) throw DomainError("rank 2 takes an empty index tuple");
    return {Real::infinity(-1, ev.bits()), Real::infinity(1, ev.bits())};
  }
  if (idx.size() != static_cast<std::size_t>(d.n - 2))
    throw DomainError("index tuple must have length n - 2 = " + std::to_string(d.n - 2));
  Real a(static_cast<long>(idx[0]), ev.bits());
  Real b(static_cast<long>(idx[0] + 1), ev.bits());
  for (std::size_t j = 1; j < idx.size(); ++j) {
    a = ev.h(a);
    b = ev.h(b);
    a.add_int(idx[j]);
    b.add_int(idx[j]);
  }
  return {a, b};
}

}  // namespace circconj
