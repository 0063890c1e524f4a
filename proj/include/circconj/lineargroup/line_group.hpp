#pragma once

#include <utility>
#include <vector>

#include "circconj/exactnum/int_matrix.hpp"
#include "circconj/homeo/eval.hpp"

namespace circconj {

/// The group G_{alpha,n}, free abelian of rank n on the standard basis
/// e_1 = hbar^(n-2)(L_1), e_2 = hbar^(n-2)(L_alpha), e_i = hbar^(n-i)(L_1).
struct LineGroupDescriptor {
  Alpha alpha;
  int n = 2;

  /// Throws DomainError unless 0 < alpha < 1 is irrational and n >= 2.
  void validate() const;
  friend bool operator==(const LineGroupDescriptor&, const LineGroupDescriptor&) = default;
};

/// Exponents over the standard basis.
using GroupVector = IntVector;

/// Basis element e_i, 1-based.
Expr basis_element(const LineGroupDescriptor& d, int i);

/// e_1^v_1 o ... o e_n^v_n as a commuting composition.
Expr element_to_expr(const LineGroupDescriptor& d, const GroupVector& v);

struct NontransitivePoint {
  Real value;
  /// Construction indices (i_1, ..., i_m): the point h(...h(h(i_1) + i_2)...) + i_m.
  std::vector<i64> index;
};

/// Nontransitive points with every construction index bounded by `bound`,
/// sorted by value.
std::vector<NontransitivePoint> nontransitive_points(const LineGroupDescriptor& d, i64 bound,
                                                     const Precision& p = {});

/// Endpoints of the minimal interval with index tuple idx (length n - 2).
/// For n = 2 the interval is the whole line, returned as (-inf, +inf).
std::pair<Real, Real> minimal_interval(const LineGroupDescriptor& d, const std::vector<i64>& idx,
                                       const Precision& p = {});

}  // namespace circconj
