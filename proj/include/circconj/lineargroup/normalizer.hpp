#pragma once

#include "circconj/lineargroup/line_group.hpp"

namespace circconj {

/// Coordinate matrix N * A~ of a homeomorphism carrying G_{alpha,n} onto
/// G_{alpha',n}, with N = [[f_alpha, S], [0, B]] a normalizer matrix of
/// G_{alpha',n} and A~ = diag(A, I).
///
/// f_alpha fixes alpha' under the Mobius action with m2 + n2 alpha' > 0.
/// A satisfies mobius_apply(A, alpha') == alpha with m2 + n2 alpha' > 0 (the
/// identity when alpha == alpha'). S is 2 x (n-2); B is (n-2) x (n-2) unit
/// upper triangular.
struct StructuredMatrix {
  UnimodularMatrix2 f_alpha;
  UnimodularMatrix2 A;
  IntMatrix S;
  IntMatrix B;

  static StructuredMatrix identity(int n);
  int n() const { return static_cast<int>(B.size()) + 2; }
  /// The n x n integer matrix N * A~.
  IntMatrix assembled() const;
  /// The normalizer part N (A dropped).
  IntMatrix normalizer_part() const;
  friend bool operator==(const StructuredMatrix&, const StructuredMatrix&) = default;
};

/// Exact admissibility check against source parameter `alpha` and target
/// parameter `alpha_target`; throws DomainError naming the failed condition.
void validate_structured(const StructuredMatrix& m, const Alpha& alpha, const Alpha& alpha_target);

/// A homeomorphism phi normalizing G_{alpha,n} with phi e_j phi^-1 equal to
/// the element with coordinates given by column j of M. M.A must be the
/// identity.
Expr normalizer_expr(const LineGroupDescriptor& d, const StructuredMatrix& m);

/// phi = normalizer_expr(to, N) o hbar^(n-2)(M_u), u = m2 + n2 alpha', carrying
/// G_{from.alpha, n} onto G_{to.alpha, n} with coordinate matrix N * A~.
Expr conjugation_expr(const LineGroupDescriptor& from, const LineGroupDescriptor& to, const StructuredMatrix& m);

}  // namespace circconj
