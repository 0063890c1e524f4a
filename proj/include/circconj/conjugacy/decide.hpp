#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "circconj/circlegroup/circle_group.hpp"
#include "circconj/lineargroup/normalizer.hpp"

namespace circconj {

/// Data carrying G_{alpha,n,k,g,f} onto G_{alpha',n,k,g',f'}: the coordinate
/// matrix C = M.assembled() with v = C u + w, w = k h, where u and v are the
/// coordinates of g and g'.
struct ConjugacyWitness {
  StructuredMatrix M;
  GroupVector w;
  GroupVector h;
  friend bool operator==(const ConjugacyWitness&, const ConjugacyWitness&) = default;
};

enum class Verdict { conjugate, not_conjugate, undecided_nonquadratic };

std::string to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::not_conjugate;
  std::optional<ConjugacyWitness> witness;
  /// For not_conjugate: {"reason": "rank" | "finite_orbit" | "alpha" |
  /// "congruence", ...evidence}. Empty object for conjugate.
  nlohmann::json certificate = nlohmann::json::object();
};

/// Layered congruence procedure. Both descriptors must be valid.
Decision decide(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2);

struct OracleBounds {
  int max_n = 4;
  int max_k = 12;
};

/// Brute-force decision: enumerates the stabilizer cycle mod k and every
/// S and B entry mod k, testing v == C u (mod k) directly.
Decision decide_oracle(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                       const OracleBounds& bounds = {});

/// Failure reason, or nullopt when the witness passes the exact check
/// (admissible block form, w in k Z^n, w == k h, v == C u + w).
std::optional<std::string> check_witness(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                         const ConjugacyWitness& wit);

/// Witness for (d2, d1) from a checked witness for (d1, d2).
ConjugacyWitness invert_witness(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                const ConjugacyWitness& wit);

/// Witness for (d1, d3) from witnesses for (d1, d2) and (d2, d3).
ConjugacyWitness compose_witness(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                 const CircleGroupDescriptor& d3, const ConjugacyWitness& first,
                                 const ConjugacyWitness& second);

}  // namespace circconj
