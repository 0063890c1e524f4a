#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "circconj/exactnum/surd.hpp"
#include "circconj/exactnum/unimodular.hpp"

namespace circconj {

/// Eventually periodic expansion [a0; a1, ...]. a0 always belongs to the
/// preperiod, so `preperiod` is never empty for an expanded surd.
struct ContinuedFraction {
  std::vector<i64> preperiod;
  std::vector<i64> period;

  /// Partial quotient a_i, walking into the period as needed.
  i64 quotient(std::size_t i) const;
  /// Convergents p_j / q_j for j = 0 .. count-1.
  std::vector<std::pair<i64, i64>> convergents(std::size_t count) const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// An irrational that is declared non-quadratic and known only through a
/// finite prefix of its continued fraction. Only the declaration is trusted:
/// the prefix supplies a numerical value, never an exact identity.
struct CfPrefix {
  std::vector<i64> quotients;

  friend bool operator==(const CfPrefix&, const CfPrefix&) = default;
};

/// Group parameter: an exact quadratic irrational or a declared
/// non-quadratic irrational.
using Alpha = std::variant<Surd, CfPrefix>;

inline bool is_quadratic(const Alpha& a) { return std::holds_alternative<Surd>(a); }

/// Exact continued fraction of an irrational surd via the Gauss map on
/// reduced (P + sqrt D) / Q states.
ContinuedFraction cf_expand(const Surd& x);

/// M with mobius_apply(M, x) == y and m2 + n2 x > 0, or nullopt when the
/// continued fractions of x and y have no common tail.
std::optional<UnimodularMatrix2> equivalent(const Surd& x, const Surd& y);

/// Generator T of the orientation-positive stabilizer of x in GL(2, Z):
/// mobius_apply(T, x) == x, m2 + n2 x > 1. Built from one period of the
/// expansion. A declared non-quadratic parameter has trivial stabilizer.
std::optional<UnimodularMatrix2> stabilizer_generator(const Surd& x);
std::optional<UnimodularMatrix2> stabilizer_generator(const Alpha& x);

/// Checks 0 < x < 1 (exact for surds; for prefixes, a0 == 0 and a nonempty tail).
bool in_unit_interval(const Alpha& x);

}  // namespace circconj
