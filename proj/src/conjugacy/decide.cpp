#include "circconj/conjugacy/decide.hpp"

#include <stdexcept>

namespace circconj {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::conjugate:
      return "conjugate";
    case Verdict::not_conjugate:
      return "not_conjugate";
    case Verdict::undecided_nonquadratic:
      return "undecided_nonquadratic";
  }
  return "unknown";
}

namespace {

using Mat2 = UnimodularMatrix2;

i64 balanced(i64 r, i64 k) {
  r = mod(r, k);
  return 2 * r > k ? r - k : r;
}

IntVector reduce(const IntVector& v, i64 k) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod(v[i], k);
  return out;
}

nlohmann::json cf_json(const Surd& x) {
  ContinuedFraction cf = cf_expand(x);
  return {{"preperiod", cf.preperiod}, {"period", cf.period}};
}

// Outcome of the checks shared by both procedures: either a final decision,
// or the matrix P carrying alpha' to alpha and the stabilizer generator of alpha'.
struct Prelude {
  std::optional<Decision> early;
  Mat2 P;
  std::optional<Mat2> T;
};

Prelude prelude(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2) {
  require_valid(d1);
  require_valid(d2);
  Prelude out;
  auto stop = [&](Verdict v, nlohmann::json cert) {
    out.early = Decision{v, std::nullopt, std::move(cert)};
    return out;
  };
  if (d1.n != d2.n) return stop(Verdict::not_conjugate, {{"reason", "rank"}, {"n1", d1.n}, {"n2", d2.n}});
  if (d1.k != d2.k)
    return stop(Verdict::not_conjugate, {{"reason", "finite_orbit"}, {"k1", d1.k}, {"k2", d2.k}});
  const Surd* a1 = std::get_if<Surd>(&d1.alpha);
  const Surd* a2 = std::get_if<Surd>(&d2.alpha);
  if (!a1 && !a2) {
    if (d1.alpha != d2.alpha)
      return stop(Verdict::undecided_nonquadratic,
                  {{"reason", "nonquadratic"},
                   {"detail", "two distinct declared non-quadratic prefixes cannot be compared exactly"}});
    out.P = Mat2::identity();
    return out;
  }
  if (!a1 || !a2)
    return stop(Verdict::not_conjugate,
                {{"reason", "alpha"},
                 {"detail", "a quadratic parameter is never equivalent to a declared non-quadratic one"}});
  auto P = equivalent(*a2, *a1);
  if (!P)
    return stop(Verdict::not_conjugate,
                {{"reason", "alpha"},
                 {"detail", "continued fractions share no tail"},
                 {"cf1", cf_json(*a1)},
                 {"cf2", cf_json(*a2)}});
  out.P = *P;
  out.T = stabilizer_generator(*a2);
  return out;
}

struct CycleEntry {
  i64 exponent;  // representative with the smallest |exponent|
  Mat2 residue;  // T^exponent mod k
};

// The cycle {T^m mod k}, ordered by |m| of the chosen representatives.
std::vector<CycleEntry> stabilizer_cycle(const std::optional<Mat2>& T, i64 k) {
  Mat2 id = Mat2::identity().reduced_mod(k);
  if (!T) return {{0, id}};
  Mat2 t = T->reduced_mod(k);
  std::vector<Mat2> powers{id};
  Mat2 cur = mul_mod(id, t, k);
  while (!(cur == id)) {
    powers.push_back(cur);
    cur = mul_mod(cur, t, k);
  }
  const i64 period = static_cast<i64>(powers.size());
  std::vector<CycleEntry> out;
  for (i64 m = 0; m < period; ++m) {
    i64 rep = 2 * m > period ? m - period : m;
    out.push_back({rep, powers[static_cast<std::size_t>(m)]});
  }
  std::stable_sort(out.begin(), out.end(), [](const CycleEntry& a, const CycleEntry& b) {
    return std::abs(a.exponent) < std::abs(b.exponent) || (std::abs(a.exponent) == std::abs(b.exponent) && a.exponent > b.exponent);
  });
  return out;
}

Mat2 stabilizer_power(const std::optional<Mat2>& T, i64 m) { return T ? power(*T, m) : Mat2::identity(); }

IntVector twisted(const CircleGroupDescriptor& d1, const Mat2& P) {
  IntVector u = d1.g;
  auto top = P.apply({u[0], u[1]});
  u[0] = top[0];
  u[1] = top[1];
  return u;
}

// Fills w = v - C u and h = w / k; the caller guarantees the congruence.
ConjugacyWitness finish(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2, StructuredMatrix M) {
  IntVector w = vec_sub(d2.g, mat_vec(M.assembled(), d1.g));
  IntVector h(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] % d1.k != 0) throw std::logic_error("congruence solution leaves a residue");
    h[i] = w[i] / d1.k;
  }
  ConjugacyWitness wit{std::move(M), std::move(w), std::move(h)};
  if (auto why = check_witness(d1, d2, wit)) throw std::logic_error("constructed witness fails its check: " + *why);
  return wit;
}

}  // namespace

Decision decide(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2) {
  Prelude pre = prelude(d1, d2);
  if (pre.early) return *pre.early;
  const int n = d1.n;
  const i64 k = d1.k;
  const auto r = static_cast<std::size_t>(n - 2);
  const IntVector u = twisted(d1, pre.P);
  const IntVector& v = d2.g;
  const IntVector lower(u.begin() + 2, u.end());

  auto congruence_failure = [&](nlohmann::json detail) {
    detail["reason"] = "congruence";
    detail["modulus"] = k;
    detail["u_mod_k"] = reduce(u, k);
    detail["v_mod_k"] = reduce(v, k);
    return Decision{Verdict::not_conjugate, std::nullopt, std::move(detail)};
  };

  StructuredMatrix M = StructuredMatrix::identity(n);
  M.A = pre.P;
  // Row i of B: v_i - u_i must lie in the span of u_{i+1}, ..., u_n mod k.
  for (std::size_t i = 0; i < r; ++i) {
    std::span<const i64> gens(lower.data() + i + 1, r - i - 1);
    i64 target = checked_sub(v[i + 2], u[i + 2]);
    auto coef = solve_in_span(target, gens, k);
    if (!coef)
      return congruence_failure({{"stage", "bottom"},
                                 {"row", i + 3},
                                 {"required", mod(target, k)},
                                 {"gcd", gcd(content(gens), k)}});
    for (std::size_t j = 0; j < coef->size(); ++j) M.B[i][i + 1 + j] = balanced((*coef)[j], k);
  }

  // Top rows: v_top - F u_top must lie in the span of u_3, ..., u_n mod k.
  const i64 top_gcd = gcd(content(lower), k);
  nlohmann::json tried = nlohmann::json::array();
  for (const CycleEntry& c : stabilizer_cycle(pre.T, k)) {
    auto fu = c.residue.apply({u[0], u[1]});
    i64 t0 = checked_sub(v[0], fu[0]);
    i64 t1 = checked_sub(v[1], fu[1]);
    auto s0 = solve_in_span(t0, lower, k);
    auto s1 = solve_in_span(t1, lower, k);
    if (!s0 || !s1) {
      tried.push_back({{"f_alpha_mod_k", c.residue.row_major()}, {"residue", {mod(t0, k), mod(t1, k)}}});
      continue;
    }
    M.f_alpha = stabilizer_power(pre.T, c.exponent);
    for (std::size_t j = 0; j < r; ++j) {
      M.S[0][j] = balanced((*s0)[j], k);
      M.S[1][j] = balanced((*s1)[j], k);
    }
    return Decision{Verdict::conjugate, finish(d1, d2, std::move(M)), nlohmann::json::object()};
  }
  return congruence_failure({{"stage", "top"}, {"gcd", top_gcd}, {"tried", std::move(tried)}});
}

Decision decide_oracle(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2, const OracleBounds& bounds) {
  if (d1.n > bounds.max_n || d2.n > bounds.max_n || d1.k > bounds.max_k || d2.k > bounds.max_k)
    throw DomainError("oracle bounds exceeded: n <= " + std::to_string(bounds.max_n) +
                      ", k <= " + std::to_string(bounds.max_k));
  Prelude pre = prelude(d1, d2);
  if (pre.early) return *pre.early;
  const int n = d1.n;
  const i64 k = d1.k;
  const auto r = static_cast<std::size_t>(n - 2);
  const IntVector& u = d1.g;
  const IntVector& v = d2.g;
  const Mat2 Pk = pre.P.reduced_mod(k);

  // Free entries: 2r of S, then the strictly upper part of B.
  std::vector<std::pair<std::size_t, std::size_t>> upper;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) upper.push_back({i, j});
  const std::size_t free = 2 * r + upper.size();

  for (const CycleEntry& c : stabilizer_cycle(pre.T, k)) {
    Mat2 top = mul_mod(c.residue, Pk, k);
    std::vector<i64> x(free, 0);
    while (true) {
      bool ok = true;
      for (std::size_t row = 0; row < 2 && ok; ++row) {
        i128 acc = row == 0 ? static_cast<i128>(top.m2) * u[0] + static_cast<i128>(top.m1) * u[1]
                            : static_cast<i128>(top.n2) * u[0] + static_cast<i128>(top.n1) * u[1];
        for (std::size_t j = 0; j < r; ++j) acc += static_cast<i128>(x[row * r + j]) * u[j + 2];
        ok = (acc - v[row]) % k == 0;
      }
      for (std::size_t i = 0; i < r && ok; ++i) {
        i128 acc = u[i + 2];
        for (std::size_t e = 0; e < upper.size(); ++e)
          if (upper[e].first == i) acc += static_cast<i128>(x[2 * r + e]) * u[upper[e].second + 2];
        ok = (acc - v[i + 2]) % k == 0;
      }
      if (ok) {
        StructuredMatrix M = StructuredMatrix::identity(n);
        M.A = pre.P;
        M.f_alpha = stabilizer_power(pre.T, c.exponent);
        for (std::size_t j = 0; j < r; ++j) {
          M.S[0][j] = x[j];
          M.S[1][j] = x[r + j];
        }
        for (std::size_t e = 0; e < upper.size(); ++e) M.B[upper[e].first][upper[e].second] = x[2 * r + e];
        return Decision{Verdict::conjugate, finish(d1, d2, std::move(M)), nlohmann::json::object()};
      }
      std::size_t pos = 0;
      while (pos < free && x[pos] == k - 1) x[pos++] = 0;
      if (pos == free) break;
      ++x[pos];
    }
  }
  return Decision{Verdict::not_conjugate, std::nullopt,
                  {{"reason", "congruence"}, {"modulus", k}, {"detail", "exhaustive search found no admissible matrix"}}};
}

std::optional<std::string> check_witness(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                         const ConjugacyWitness& wit) {
  if (d1.n != d2.n || d1.k != d2.k) return "descriptors differ in n or k";
  const auto n = static_cast<std::size_t>(d1.n);
  if (wit.M.n() != d1.n) return "matrix rank does not match";
  try {
    validate_structured(wit.M, d1.alpha, d2.alpha);
  } catch (const DomainError& e) {
    return std::string(e.what());
  }
  if (wit.w.size() != n || wit.h.size() != n) return "w and h must have n coordinates";
  for (std::size_t i = 0; i < n; ++i)
    if (wit.w[i] != checked_mul(d1.k, wit.h[i])) return "w is not k h at coordinate " + std::to_string(i + 1);
  IntVector rhs = vec_add(mat_vec(wit.M.assembled(), d1.g), wit.w);
  if (rhs != d2.g) return "v != C u + w";
  return std::nullopt;
}

namespace {

// Rebuilds the block form from an assembled matrix whose top-left block is F P.
StructuredMatrix from_assembled(const IntMatrix& c, const Mat2& P) {
  const std::size_t n = c.size();
  StructuredMatrix m = StructuredMatrix::identity(static_cast<int>(n));
  Mat2 fp = Mat2::make(c[0][0], c[0][1], c[1][0], c[1][1]);
  m.f_alpha = fp * P.inverse();
  m.A = P;
  for (std::size_t j = 2; j < n; ++j) {
    m.S[0][j - 2] = c[0][j];
    m.S[1][j - 2] = c[1][j];
    for (std::size_t i = 2; i < n; ++i) m.B[i - 2][j - 2] = c[i][j];
  }
  return m;
}

IntMatrix assembled_inverse(const StructuredMatrix& m) {
  const std::size_t n = m.B.size() + 2;
  Mat2 fp_inv = (m.f_alpha * m.A).inverse();
  IntMatrix b_inv = unit_upper_inverse(m.B);
  IntMatrix out(n, IntVector(n, 0));
  out[0][0] = fp_inv.m2;
  out[0][1] = fp_inv.m1;
  out[1][0] = fp_inv.n2;
  out[1][1] = fp_inv.n1;
  for (std::size_t j = 2; j < n; ++j) {
    // -(FP)^-1 S B^-1, column j.
    i64 s0 = 0, s1 = 0;
    for (std::size_t l = 2; l < n; ++l) {
      s0 = checked_add(s0, checked_mul(m.S[0][l - 2], b_inv[l - 2][j - 2]));
      s1 = checked_add(s1, checked_mul(m.S[1][l - 2], b_inv[l - 2][j - 2]));
    }
    auto top = fp_inv.apply({s0, s1});
    out[0][j] = -top[0];
    out[1][j] = -top[1];
    for (std::size_t i = 2; i < n; ++i) out[i][j] = b_inv[i - 2][j - 2];
  }
  return out;
}

ConjugacyWitness checked(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2, ConjugacyWitness wit) {
  if (auto why = check_witness(d1, d2, wit)) throw DomainError("derived witness fails its check: " + *why);
  return wit;
}

}  // namespace

ConjugacyWitness invert_witness(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                const ConjugacyWitness& wit) {
  if (auto why = check_witness(d1, d2, wit)) throw DomainError("witness fails its check: " + *why);
  IntMatrix c_inv = assembled_inverse(wit.M);
  ConjugacyWitness out;
  out.M = from_assembled(c_inv, wit.M.A.inverse());
  out.w = vec_scale(mat_vec(c_inv, wit.w), -1);
  out.h = vec_scale(mat_vec(c_inv, wit.h), -1);
  return checked(d2, d1, std::move(out));
}

ConjugacyWitness compose_witness(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                 const CircleGroupDescriptor& d3, const ConjugacyWitness& first,
                                 const ConjugacyWitness& second) {
  if (auto why = check_witness(d1, d2, first)) throw DomainError("first witness fails its check: " + *why);
  if (auto why = check_witness(d2, d3, second)) throw DomainError("second witness fails its check: " + *why);
  const IntMatrix c2 = second.M.assembled();
  ConjugacyWitness out;
  out.M = from_assembled(mat_mul(c2, first.M.assembled()), second.M.A * first.M.A);
  out.w = vec_add(mat_vec(c2, first.w), second.w);
  out.h = vec_add(mat_vec(c2, first.h), second.h);
  return checked(d1, d3, std::move(out));
}

}  // namespace circconj
