#include "circconj/exactnum/continued_fraction.hpp"

#include <map>

namespace circconj {

namespace {

// Textbook Mobius matrix t -> (p t + q) / (r t + s), composed covariantly.
struct Std2 {
  i64 p = 1, q = 0, r = 0, s = 1;

  Std2 operator*(const Std2& o) const {
    auto dot = [](i64 a, i64 b, i64 c, i64 d) { return checked_add(checked_mul(a, b), checked_mul(c, d)); };
    return {dot(p, o.p, q, o.r), dot(p, o.q, q, o.s), dot(r, o.p, s, o.r), dot(r, o.q, s, o.s)};
  }
  Std2 inverse() const {
    i64 det = checked_sub(checked_mul(p, s), checked_mul(q, r));
    return {s * det, -q * det, -r * det, p * det};
  }
  UnimodularMatrix2 to_matrix() const { return UnimodularMatrix2::from_standard(p, q, r, s); }
};

Std2 quotient_matrix(i64 a) { return {a, 1, 1, 0}; }

// x = (P + sqrt D) / Q with Q | D - P^2.
struct GaussState {
  i64 P;
  i64 Q;
  auto operator<=>(const GaussState&) const = default;
};

struct Expansion {
  ContinuedFraction cf;
  i64 D = 0;
  std::vector<GaussState> states;  // states[j] is the complete quotient x_j
};

Expansion expand(const Surd& x) {
  if (x.is_rational()) throw DomainError("continued fraction expansion needs an irrational, got " + x.to_string());
  i128 P = x.b() > 0 ? x.a() : -static_cast<i128>(x.a());
  i128 Q = x.b() > 0 ? x.c() : -static_cast<i128>(x.c());
  i128 D = static_cast<i128>(x.b()) * x.b() * x.d();
  if ((D - P * P) % Q != 0) {
    i128 aq = abs128(Q);
    P *= aq;
    D *= Q * Q;
    Q *= aq;
  }
  Expansion out;
  out.D = narrow(D);
  i128 root = isqrt128(D);
  std::map<GaussState, std::size_t> seen;
  std::vector<i64> quotients;
  for (std::size_t j = 0;; ++j) {
    GaussState st{narrow(P), narrow(Q)};
    if (j >= 1) {
      auto it = seen.find(st);
      if (it != seen.end()) {
        std::size_t start = it->second;
        out.cf.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
        out.cf.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
        return out;
      }
      seen.emplace(st, j);
    }
    out.states.push_back(st);
    // floor((P + sqrt D) / Q); sqrt D lies strictly between root and root + 1.
    i128 a = Q > 0 ? floor_div128(P + root, Q) : -(floor_div128(P + root, -Q) + 1);
    quotients.push_back(narrow(a));
    i128 nextP = a * Q - P;
    i128 nextQ = (D - nextP * nextP) / Q;
    P = nextP;
    Q = nextQ;
  }
}

Surd state_value(const GaussState& st, i64 D) { return Surd(st.P, 1, st.Q, D); }

// K_j with x = K_j(x_j).
std::vector<Std2> prefix_matrices(const std::vector<i64>& quotients) {
  std::vector<Std2> k{Std2{}};
  for (i64 a : quotients) k.push_back(k.back() * quotient_matrix(a));
  return k;
}

std::vector<i64> all_quotients(const ContinuedFraction& cf) {
  std::vector<i64> q = cf.preperiod;
  q.insert(q.end(), cf.period.begin(), cf.period.end());
  return q;
}

}  // namespace

i64 ContinuedFraction::quotient(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  if (period.empty()) throw DomainError("continued fraction index past a finite prefix");
  return period[(i - preperiod.size()) % period.size()];
}

std::vector<std::pair<i64, i64>> ContinuedFraction::convergents(std::size_t count) const {
  std::vector<std::pair<i64, i64>> out;
  i64 p_prev = 1, q_prev = 0, p = quotient(0), q = 1;
  out.emplace_back(p, q);
  for (std::size_t j = 1; j < count; ++j) {
    i64 a = quotient(j);
    i64 np = checked_add(checked_mul(a, p), p_prev);
    i64 nq = checked_add(checked_mul(a, q), q_prev);
    p_prev = p;
    q_prev = q;
    p = np;
    q = nq;
    out.emplace_back(p, q);
  }
  return out;
}

ContinuedFraction cf_expand(const Surd& x) { return expand(x).cf; }

std::optional<UnimodularMatrix2> equivalent(const Surd& x, const Surd& y) {
  Expansion ex = expand(x);
  Expansion ey = expand(y);
  if (x.d() != y.d()) return std::nullopt;

  auto kx = prefix_matrices(all_quotients(ex.cf));
  auto ky = prefix_matrices(all_quotients(ey.cf));
  std::size_t sy = ey.cf.preperiod.size();
  Surd target = state_value(ey.states[sy], ey.D);
  std::size_t sx = ex.cf.preperiod.size();
  for (std::size_t j = sx; j < sx + ex.cf.period.size(); ++j) {
    if (state_value(ex.states[j], ex.D) != target) continue;
    Std2 m = ky[sy] * kx[j].inverse();
    UnimodularMatrix2 out = sign_normalized(m.to_matrix(), x);
    if (mobius_apply(out, x) != y) throw std::logic_error("equivalence matrix failed its exact recheck");
    return out;
  }
  return std::nullopt;
}

std::optional<UnimodularMatrix2> stabilizer_generator(const Surd& x) {
  Expansion ex = expand(x);
  auto k = prefix_matrices(all_quotients(ex.cf));
  std::size_t s = ex.cf.preperiod.size();
  std::size_t p = ex.cf.period.size();
  Std2 t = k[s + p] * k[s].inverse();
  UnimodularMatrix2 gen = sign_normalized(t.to_matrix(), x);
  if (gen.multiplier(x) < Surd::integer(1)) gen = sign_normalized(gen.inverse(), x);
  if (mobius_apply(gen, x) != x) throw std::logic_error("stabilizer generator failed its exact recheck");
  return gen;
}

std::optional<UnimodularMatrix2> stabilizer_generator(const Alpha& x) {
  if (const Surd* s = std::get_if<Surd>(&x)) return stabilizer_generator(*s);
  return std::nullopt;
}

bool in_unit_interval(const Alpha& x) {
  if (const Surd* s = std::get_if<Surd>(&x)) return s->sign() > 0 && *s < Surd::integer(1);
  const auto& q = std::get<CfPrefix>(x).quotients;
  if (q.size() < 2 || q[0] != 0) return false;
  for (std::size_t i = 1; i < q.size(); ++i)
    if (q[i] < 1) return false;
  return true;
}

}  // namespace circconj
