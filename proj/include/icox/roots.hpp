#pragma once

#include <string>
#include <vector>

#include "icox/combinatorics.hpp"
#include "icox/growth.hpp"
#include "icox/numeric.hpp"
#include "icox/polynomial.hpp"

namespace icox {

// Generalized Sturm chain of (p, q): S0 = p, S1 = q, S_{k+1} = -rem(S_{k-1}, S_k),
// each member scaled positively to a primitive integer polynomial.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p, const IntPolynomial& q);

// Sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<IntPolynomial>& chain, const Rat& x);

// Disjoint isolating intervals, one per distinct real root of p inside the
// open interval (lo, hi). The square-free part is taken first, so
// multiplicities do not matter. Rational roots come back as exact
// zero-width intervals.
std::vector<RatInterval> sturm_isolate(const IntPolynomial& p, const Rat& lo, const Rat& hi);

// Number of roots of the square-free p strictly inside the axis-aligned
// rectangle [x0,x1] x [y0,y1], counted via the winding number of p along
// the boundary (Cauchy indices of the edge restrictions). Throws
// DomainError when a root lies on (or a degeneracy touches) the boundary;
// callers jitter the rectangle and retry.
int count_roots_in_rect(const IntPolynomial& p, const Rat& x0, const Rat& x1, const Rat& y0,
                        const Rat& y1);

struct RootCertificate {
  RatInterval r0;    // enclosure of the dominant (smallest-modulus) root, in (0, 1/2)
  RatInterval tau;   // growth rate 1/r0, endpoints swapped reciprocals
  bool simple = false;
  bool perron = false;
  // Certified lower bound: every other root z of g has |z| >= hi(r0) + modulus_gap.
  Rat modulus_gap;
  IntPolynomial tau_min_poly_candidate;  // monic, degree 7

  std::string str() const;
};

// Isolates the unique root of g in (0, 1/2), refines the enclosure to width
// <= tol, and runs the Perron certification. Throws InternalContradiction
// when the (0,1/2) root is not unique, InconclusiveError when the
// certification cannot separate roots at the configured depth.
RootCertificate growth_rate(const InvariantVector& iv, const Rat& tol);
RootCertificate growth_rate(const PolyhedronCombinatorics& P, const Rat& tol);

struct PerronResult {
  bool perron = false;
  bool simple = false;
  Rat modulus_gap;
};

// Boxes every root of g and verifies all boxes but the dominant root's lie
// strictly outside the disk |z| <= hi(r0_enclosure). Known cyclotomic
// factors (1+t^2, 1+t+t^2, 1-t+t^2) are divided out exactly first; their
// roots sit on |z| = 1.
PerronResult perron_certify(const IntPolynomial& g, const RatInterval& r0_enclosure);

// Monic degree-7 integer polynomial -(tau^7/2) g(1/tau), the algebraic
// integrality witness for the growth rate. Requires c9, c10 even.
IntPolynomial tau_polynomial(const InvariantVector& iv);

struct SignCheckReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string str() const;
};

// Sampled sign checks of g on (-1/2, 0), of g' on (0, 1/2) (skipped with
// the standard remark for right-angled input), and the exact endpoint
// values g(0) = -2, g(1/2) > 0. A spot-check, not a proof, and reported as
// such.
SignCheckReport growth_sign_checks(const PolyhedronCombinatorics& P, int grid);

// For right-angled input, verifies g = 2(t^2+1)(t^4+t^2+1)((f-3)t - 1)
// exactly and returns the integer growth rate f - 3.
long long right_angled_rate(const PolyhedronCombinatorics& P);

}  // namespace icox
