#pragma once

#include "circconj/conjugacy/decide.hpp"

namespace circconj {

/// Circle homeomorphism psi with psi G1 psi^-1 = G2 assembled from a witness:
/// psi = Retwist(f2 o bar2(h)^-1, f1) o CircleExtend(phi, f1), where phi is the
/// line conjugation with coordinate matrix C. Throws DomainError if the
/// witness fails check_witness.
Expr witness_to_homeo(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2, const ConjugacyWitness& wit);

/// Same assembly without the exact check. Used for negative controls.
Expr witness_to_homeo_unchecked(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                const ConjugacyWitness& wit);

/// Image of each generator of G1 under conjugation by psi, in the normal
/// form of G2: (0, e_i) -> (0, C e_i) and f1 -> f2 o bar2(-h).
struct GeneratorImage {
  std::string name;  // "e1", ..., "en", "f"
  CircleElement source;
  CircleElement image;
};
std::vector<GeneratorImage> generator_images(const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                             const ConjugacyWitness& wit);

struct GeneratorReport {
  GeneratorImage generator;
  double max_deviation = 0;
  int evaluated = 0;
  int skipped = 0;  // grid points abandoned near a breakpoint
  bool passed = false;
};

struct VerifyReport {
  std::vector<GeneratorReport> generators;
  int grid_size = 0;
  double tol = 0;
  Precision precision;
  bool passed = false;
};

/// Checks sup |psi e psi^-1 (t) - e'(t)| <= tol over a grid of grid_size
/// circle points at distance >= delta from the marked points, for every
/// generator e of G1 with image e' in G2. Points whose evaluation runs into
/// a breakpoint are skipped and counted.
VerifyReport verify_conjugation(const Expr& psi, const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2,
                                const ConjugacyWitness& wit, int grid_size, double tol, const Precision& p = {});

/// The witness with h_1 shifted by one and w_1 by k. It fails check_witness,
/// and the psi assembled from it does not conjugate f1 to its claimed image.
ConjugacyWitness corrupt_witness(const ConjugacyWitness& wit, int k, std::size_t coordinate = 0);

}  // namespace circconj
