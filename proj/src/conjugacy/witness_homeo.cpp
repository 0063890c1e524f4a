#include "circconj/conjugacy/witness_homeo.hpp"

#include <cmath>

namespace circconj {

Expr witness_to_homeo_unchecked(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                const ConjugacyWitness& wit) {
  require_valid(d1);
  require_valid(d2);
  if (d1.n != d2.n || d1.k != d2.k) throw DomainError("descriptors differ in n or k");
  std::vector<Expr> parts;
  Expr f1 = canonical_f(d1);
  Expr f2 = canonical_f(d2);
  if (d1.k > 1 && !(is_zero(wit.h) && f1 == f2)) {
    Expr twisted = is_zero(wit.h) ? f2 : compose({f2, bar_extend(d2, vec_scale(wit.h, -1))});
    parts.push_back(retwist(twisted, f1, d1.k));
  }
  Expr phi = conjugation_expr(d1.line(), d2.line(), wit.M);
  if (!phi.as<node::Identity>()) parts.push_back(circle_extend(phi, d1.k, f1));
  if (parts.empty()) return identity_expr();
  if (parts.size() == 1) return parts.front();
  return compose(std::move(parts));
}

Expr witness_to_homeo(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2, const ConjugacyWitness& wit) {
  if (auto why = check_witness(d1, d2, wit)) throw DomainError("witness fails its check: " + *why);
  return witness_to_homeo_unchecked(d1, d2, wit);
}

std::vector<GeneratorImage> generator_images(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                             const ConjugacyWitness& wit) {
  const auto n = static_cast<std::size_t>(d1.n);
  IntMatrix c = wit.M.assembled();
  std::vector<GeneratorImage> out;
  for (std::size_t i = 0; i < n; ++i) {
    GroupVector e(n, 0), col(n, 0);
    e[i] = 1;
    for (std::size_t r = 0; r < n; ++r) col[r] = c[r][i];
    out.push_back({"e" + std::to_string(i + 1), {0, e}, {0, col}});
  }
  // f1 = f^1 and its claimed image f2 o bar2(-h), both in normal form.
  auto f_normal = [&](const CircleGroupDescriptor& d) {
    return d.k > 1 ? CircleElement{1, GroupVector(n, 0)} : CircleElement{0, d.g};
  };
  CircleElement f = f_normal(d1);
  CircleElement image = circle_multiply(d2, f_normal(d2), {0, vec_scale(wit.h, -1)});
  out.push_back({"f", f, image});
  return out;
}

VerifyReport verify_conjugation(const Expr& psi, const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                const ConjugacyWitness& wit, int grid_size, double tol, const Precision& p) {
  if (grid_size < 1) throw DomainError("grid_size must be positive");
  Evaluator ev(p);
  const mpfr_prec_t bits = ev.bits();
  std::vector<CirclePoint> grid;
  for (int s = 0; s < grid_size; ++s) {
    double t = (s + 0.4142) / grid_size;
    double kt = t * d1.k;
    if (std::abs(kt - std::round(kt)) / d1.k < p.delta) continue;
    grid.push_back(LiftPoint::approx(Real::from_double(t, bits)));
  }
  VerifyReport report{{}, grid_size, tol, p, true};
  Expr psi_inv = inverse(psi);
  for (const GeneratorImage& gen : generator_images(d1, d2, wit)) {
    GeneratorReport g{gen};
    Expr lhs = compose({psi, element_expr(d1, gen.source), psi_inv});
    Expr rhs = element_expr(d2, gen.image);
    for (const CirclePoint& t : grid) {
      try {
        Real a = ev.circle(lhs, t).x;
        Real b = ev.circle(rhs, t).x;
        Real diff = abs(a - b);
        double dev = std::min(diff.to_double(), 1.0 - diff.to_double());
        g.max_deviation = std::max(g.max_deviation, dev);
        ++g.evaluated;
      } catch (const PrecisionExhausted&) {
        ++g.skipped;
      }
    }
    g.passed = g.evaluated > 0 && g.max_deviation <= tol;
    report.passed = report.passed && g.passed;
    report.generators.push_back(std::move(g));
  }
  return report;
}

ConjugacyWitness corrupt_witness(const ConjugacyWitness& wit, int k, std::size_t coordinate) {
  ConjugacyWitness out = wit;
  if (coordinate >= out.h.size()) throw DomainError("corruption coordinate out of range");
  out.h[coordinate] += 1;
  out.w[coordinate] += k;
  return out;
}

}  // namespace circconj
