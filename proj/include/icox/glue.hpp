#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icox/combinatorics.hpp"
#include "icox/numeric.hpp"
#include "icox/roots.hpp"

namespace icox {

// Pairing of the boundary edges of face_p in P with those of face_q in Q.
// pairs[k] = {a, b} identifies edge (face_p, a) of P with edge (face_q, b)
// of Q. A valid matching is a bijection between the two boundaries that
// carries consecutive edges to consecutive edges (the two walks are
// unoriented cycles, so both dihedral alignments are admissible).
struct FaceMatching {
  int face_p = 0;
  int face_q = 0;
  std::vector<std::pair<int, int>> pairs;
};

// Validates the matching against the two boundary walks; throws DomainError
// when it is not a consecutive-preserving bijection.
void check_matching_shape(const PolyhedronCombinatorics& P, const PolyhedronCombinatorics& Q,
                          const FaceMatching& match);

struct GlueCheckReport {
  std::vector<CheckResult> checks;
  bool glueable() const;
  std::string str() const;
};

// Per matched edge pair with labels (m, m'): the combined dihedral angle
// pi/m + pi/m' must be pi (both right angles, faces merge) or pi/k with
// k in {2,3,4,6} (allowed pairs 4+4 -> 2, 6+6 -> 3, 3+6 -> 2). The report
// also classifies every predicted boundary cusp link of the glued model.
GlueCheckReport check_glueable(const PolyhedronCombinatorics& P,
                               const PolyhedronCombinatorics& Q, const FaceMatching& match);

// Builds the glued polyhedron: removes the matched faces, identifies the
// boundary cusps, merges faces across vanished right-angle edge pairs, and
// creates the combined edges elsewhere. The result is fully re-validated;
// failures throw DomainError with the embedded report.
PolyhedronCombinatorics glue(const PolyhedronCombinatorics& P, const PolyhedronCombinatorics& Q,
                             const FaceMatching& match);

// All glueable matchings between face_p of P and face_q of Q, i.e. the up
// to 2L dihedral alignments of the two boundary walks that pass
// check_glueable.
std::vector<FaceMatching> enumerate_matchings(const PolyhedronCombinatorics& P,
                                              const PolyhedronCombinatorics& Q, int face_p,
                                              int face_q);

struct GlueIdentityReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string str() const;
};

// Verifies the cusp/face bookkeeping of the construction:
//   c(glued)   = c(P) + c(Q) - c(F)
//   c9(glued)  = c9(P) + c9(Q) + c_{2,6}(F)   [like-label matchings only]
//   c10(glued) = c10(P) + c10(Q) - 2 c_{4,4}(F) - c_{2,4}(F)
//   f(glued)   = f(P) + f(Q) - e2(F) - 2
// The c9 identity presumes each pi/6-edge meets a pi/6-edge; matchings with
// a 3<->6 pair get NotApplicable there instead of a verdict.
GlueIdentityReport glue_identities_check(const PolyhedronCombinatorics& P,
                                         const PolyhedronCombinatorics& Q,
                                         const FaceMatching& match,
                                         const PolyhedronCombinatorics& glued);

struct RateMonotonicityReport {
  RootCertificate cert_p, cert_q, cert_glued;
  bool tau_increases = false;       // certified disjoint enclosures
  bool pointwise_dominance = false; // g_glued > g_P and g_Q at 64 sample points
  std::string str() const;
  bool ok() const { return tau_increases && pointwise_dominance; }
};

// Certifies tau(glued) > max(tau(P), tau(Q)) by refining the root
// enclosures until they are disjoint, and spot-checks the proof's pointwise
// inequality g_glued(t) > g_P(t), g_Q(t) at 64 rational points in (0, 1/2).
RateMonotonicityReport rate_monotonicity_check(const PolyhedronCombinatorics& P,
                              const PolyhedronCombinatorics& Q,
                              const PolyhedronCombinatorics& glued, const Rat& tol);

}  // namespace icox
