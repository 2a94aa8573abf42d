#pragma once

#include <string>

#include "icox/errors.hpp"

namespace icox {

struct LobachevskyValue {
  double argument = 0;  // reduced into [0, pi)
  double value = 0;
  double error_bound = 0;  // |value - Lambda(argument)| <= error_bound
};

// Lambda(x) = -int_0^x log|2 sin z| dz, evaluated by the Bernoulli-number
// log-series with a certified truncation bound. Pi-periodic and odd; the
// argument is reduced into [0, pi) first. error_bound <= tol on return.
LobachevskyValue lobachevsky(double x, double tol = 1e-12);

// Same function at the exact rational angle (p/q) * pi; the reduction into
// [0, pi) happens on the fraction, so large arguments lose no accuracy.
LobachevskyValue lobachevsky_pi_fraction(long p, long q, double tol = 1e-12);

// Independent oracle: adaptive quadrature of the defining integral, with the
// logarithmic endpoint singularity split off analytically. 0 < x < pi.
double lobachevsky_quadrature(double x, double tol = 1e-10);

// Opposite edges of an ideal tetrahedron carry equal dihedral angles; the
// three distinct angles must sum to pi.
struct TetrahedronAngles {
  double alpha = 0, beta = 0, gamma = 0;
};

struct VolumeValue {
  double value = 0;
  double error_bound = 0;

  std::string str() const;
};

// vol(T) = Lambda(alpha) + Lambda(beta) + Lambda(gamma); error <= 3 tol.
VolumeValue ideal_tetrahedron_volume(const TetrahedronAngles& angles, double tol = 1e-12);

// Exact-angle volumes of the catalog polyhedra:
//   P1 = L(pi/3)+L(pi/6), P2 = 2 L(pi/4), P3 = 3 L(pi/3),
//   P4 = 2 vol(P1), P5 = 2 vol(P2).
// The right-angled octahedron has no such decomposition here and is
// rejected.
VolumeValue catalog_volume(const std::string& name, double tol = 1e-12);

}  // namespace icox
