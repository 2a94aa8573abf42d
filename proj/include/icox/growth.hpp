#pragma once

#include <string>

#include "icox/combinatorics.hpp"
#include "icox/polynomial.hpp"

namespace icox {

// [n] = 1 + t + ... + t^{n-1}; [1] = 1. Requires n >= 1.
IntPolynomial bracket(int n);

// Irreducible finite Coxeter group, identified by family symbol and rank.
// The order parameter m is only meaningful for I2(m).
struct FiniteGroupSymbol {
  char family = 'A';  // A, B, D, E, F, H, I (= I2)
  int rank = 1;
  int m = 0;
};

// Product of brackets [m_i + 1] over the exponents of the group.
IntPolynomial finite_growth(const FiniteGroupSymbol& symbol);

// Growth series denominator polynomial: g(t) with
//   F(t) = 2(1+t)^2 (1+t^2)(1+t+t^2)(1-t+t^2) / ((t-1) g(t)).
// Coefficients (degree 7 down to 0):
//   2c-2, 2c-2f+2, 2c+2f-c9-8, 4c-4f+c9-c10+4, 4f-c9+c10-12, 2c-2f+c9,
//   2f-6, -2.
IntPolynomial g_polynomial(const InvariantVector& iv);

// Growth function from the alternating sum over the finite standard
// subgroups: the empty set, one rank-1 group per face, one rank-2 group per
// edge. The polyhedron being ideal, no higher-rank finite subgroup occurs.
RationalFunction steinberg_growth(const InvariantVector& iv);
RationalFunction steinberg_growth(const PolyhedronCombinatorics& P);

// Growth function assembled from g_polynomial, canonicalized exactly.
RationalFunction closed_form_growth(const InvariantVector& iv);
RationalFunction closed_form_growth(const PolyhedronCombinatorics& P);

// Exact rational value of g at 1/2; equals (55c + 50f + 10 c9 + 4 c10 - 415)/64.
Rat g_at_half(const InvariantVector& iv);

}  // namespace icox
