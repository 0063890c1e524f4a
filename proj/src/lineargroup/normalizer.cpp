#include "circconj/lineargroup/normalizer.hpp"

namespace circconj {

namespace {

void check_unimodular(const UnimodularMatrix2& m, const char* name) {
  i64 det = m.det();
  if (det != 1 && det != -1) throw DomainError(std::string(name) + " is not unimodular: " + m.to_string());
}

}  // namespace

StructuredMatrix StructuredMatrix::identity(int n) {
  if (n < 2) throw DomainError("rank n must be at least 2");
  auto r = static_cast<std::size_t>(n - 2);
  return {UnimodularMatrix2::identity(), UnimodularMatrix2::identity(), IntMatrix(2, IntVector(r, 0)),
          identity_matrix(r)};
}

IntMatrix StructuredMatrix::normalizer_part() const {
  const std::size_t n = B.size() + 2;
  IntMatrix out(n, IntVector(n, 0));
  out[0][0] = f_alpha.m2;
  out[0][1] = f_alpha.m1;
  out[1][0] = f_alpha.n2;
  out[1][1] = f_alpha.n1;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t j = 0; j + 2 < n; ++j) out[r][j + 2] = S[r][j];
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = 0; j + 2 < n; ++j) out[i + 2][j + 2] = B[i][j];
  return out;
}

IntMatrix StructuredMatrix::assembled() const {
  IntMatrix a = identity_matrix(B.size() + 2);
  a[0][0] = A.m2;
  a[0][1] = A.m1;
  a[1][0] = A.n2;
  a[1][1] = A.n1;
  return mat_mul(normalizer_part(), a);
}

void validate_structured(const StructuredMatrix& m, const Alpha& alpha, const Alpha& alpha_target) {
  const std::size_t r = m.B.size();
  if (m.S.size() != 2 || m.S[0].size() != r || m.S[1].size() != r)
    throw DomainError("S block must be 2 x " + std::to_string(r));
  if (!is_unit_upper_triangular(m.B)) throw DomainError("B block must be unit upper triangular");
  check_unimodular(m.f_alpha, "f_alpha");
  check_unimodular(m.A, "A");
  const Surd* src = std::get_if<Surd>(&alpha);
  const Surd* dst = std::get_if<Surd>(&alpha_target);
  if (!src || !dst) {
    if (src || dst || alpha != alpha_target) throw DomainError("no exact equivalence between these parameters");
    if (!m.A.is_identity()) throw DomainError("A must be the identity for a declared non-quadratic parameter");
    if (!m.f_alpha.is_identity()) throw DomainError("f_alpha must be the identity: the stabilizer is trivial");
    return;
  }
  if (mobius_apply(m.f_alpha, *dst) != *dst) throw DomainError("f_alpha does not fix alpha: " + m.f_alpha.to_string());
  if (m.f_alpha.multiplier(*dst).sign() <= 0) throw DomainError("f_alpha is not sign-normalized");
  if (mobius_apply(m.A, *dst) != *src) throw DomainError("A does not carry alpha' to alpha: " + m.A.to_string());
  if (m.A.multiplier(*dst).sign() <= 0) throw DomainError("A is not sign-normalized");
}

Expr normalizer_expr(const LineGroupDescriptor& d, const StructuredMatrix& m) {
  d.validate();
  if (m.n() != d.n) throw DomainError("matrix rank does not match the group");
  if (!m.A.is_identity()) throw DomainError("a normalizer matrix has A = identity");
  validate_structured(m, d.alpha, d.alpha);
  const int n = d.n;
  std::vector<Expr> parts;
  if (!m.f_alpha.is_identity())
    parts.push_back(hbar_iter(scale(m.f_alpha.multiplier(std::get<Surd>(d.alpha))), n - 2));
  // Columns of U = [[I, F^-1 S], [0, B]], realized right to left from column n down to 3.
  UnimodularMatrix2 finv = m.f_alpha.inverse();
  for (int j = n; j >= 3; --j) {
    auto col = static_cast<std::size_t>(j - 3);
    auto top = finv.apply({m.S[0][col], m.S[1][col]});
    GroupVector t{top[0], top[1]};
    for (int i = 3; i < j; ++i) t.push_back(m.B[static_cast<std::size_t>(i - 3)][col]);
    if (is_zero(t)) continue;
    Expr tau = element_to_expr({d.alpha, j - 1}, t);
    parts.push_back(hbar_iter(staircase_unchecked(hbar_wrap(tau)), n - j));
  }
  if (parts.empty()) return identity_expr();
  if (parts.size() == 1) return parts.front();
  return compose(std::move(parts));
}

Expr conjugation_expr(const LineGroupDescriptor& from, const LineGroupDescriptor& to, const StructuredMatrix& m) {
  from.validate();
  to.validate();
  if (from.n != to.n || m.n() != to.n) throw DomainError("ranks do not match");
  validate_structured(m, from.alpha, to.alpha);
  StructuredMatrix normal = m;
  normal.A = UnimodularMatrix2::identity();
  Expr phi = normalizer_expr(to, normal);
  if (m.A.is_identity()) return phi;
  Expr standard = hbar_iter(scale(m.A.multiplier(std::get<Surd>(to.alpha))), to.n - 2);
  if (phi.as<node::Identity>()) return standard;
  return compose({phi, standard});
}

}  // namespace circconj
