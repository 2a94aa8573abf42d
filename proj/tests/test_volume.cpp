#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "icox/volume.hpp"

using namespace icox;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference values, frozen from the quadrature oracle; they agree with the
// classical constants (Catalan's constant G = 2 L(pi/4), the regular ideal
// tetrahedron volume 3 L(pi/3), and L(pi/6) = (3/2) L(pi/3)).
constexpr double kLpi6 = 0.5074708032048258;
constexpr double kLpi4 = 0.4579827970886090;
constexpr double kLpi3 = 0.3383138688032168;

}  // namespace

TEST_CASE("the function vanishes at pi/2") {
  LobachevskyValue v = lobachevsky(kPi / 2, 1e-12);
  CHECK(std::fabs(v.value) <= 1e-12);
  CHECK(v.error_bound <= 1e-12);
  CHECK(std::fabs(lobachevsky_quadrature(kPi / 2, 1e-11)) <= 1e-9);
}

TEST_CASE("series values match the quadrature oracle at the special angles") {
  struct Ref {
    long p, q;
    double value;
  } refs[] = {{1, 6, kLpi6}, {1, 4, kLpi4}, {1, 3, kLpi3}};
  for (const auto& r : refs) {
    LobachevskyValue s = lobachevsky_pi_fraction(r.p, r.q, 1e-13);
    CHECK(std::fabs(s.value - r.value) <= 1e-11);
    double quad = lobachevsky_quadrature(kPi * static_cast<double>(r.p) / r.q, 1e-11);
    CHECK(std::fabs(quad - r.value) <= 1e-9);
    CHECK(s.error_bound <= 1e-13);
  }
}

TEST_CASE("series and quadrature agree on a 100-point grid") {
  for (int k = 1; k <= 100; ++k) {
    double x = kPi * k / 101.0;
    LobachevskyValue s = lobachevsky(x, 1e-12);
    double q = lobachevsky_quadrature(x, 1e-10);
    CHECK_MESSAGE(std::fabs(s.value - q) <= 1e-9, "x = ", x);
  }
}

TEST_CASE("periodicity and oddness under reduction") {
  for (double x : {0.3, 0.7, 1.2, 1.5}) {
    double base = lobachevsky(x, 1e-12).value;
    CHECK(std::fabs(lobachevsky(x + kPi, 1e-12).value - base) <= 1e-11);
    CHECK(std::fabs(lobachevsky(x + 10 * kPi, 1e-12).value - base) <= 1e-9);
    CHECK(std::fabs(lobachevsky(-x, 1e-12).value + base) <= 1e-11);
  }
  // Exact fraction reduction: 7pi/3 = 2pi + pi/3.
  CHECK(std::fabs(lobachevsky_pi_fraction(7, 3, 1e-13).value - kLpi3) <= 1e-11);
  CHECK(std::fabs(lobachevsky_pi_fraction(-1, 3, 1e-13).value + kLpi3) <= 1e-11);
}

TEST_CASE("finite differences reproduce the stated derivatives") {
  // d/dx Lambda = -log(2 sin x), checked at O(h^2).
  const double h1 = 1e-4;
  for (int j = 1; j <= 10; ++j) {
    double x = kPi / 6 + j * (kPi / 3) / 11.0;
    double fd = (lobachevsky(x + h1, 1e-13).value - lobachevsky(x - h1, 1e-13).value) / (2 * h1);
    CHECK_MESSAGE(std::fabs(fd + std::log(2.0 * std::sin(x))) <= 5e-8, "x = ", x);
  }
  // d2/dx2 Lambda = -1/tan x.
  const double h2 = 1e-3;
  for (int j = 1; j <= 10; ++j) {
    double x = kPi / 6 + j * (kPi / 3) / 11.0;
    double fd = (lobachevsky(x + h2, 1e-13).value - 2 * lobachevsky(x, 1e-13).value +
                 lobachevsky(x - h2, 1e-13).value) /
                (h2 * h2);
    CHECK_MESSAGE(std::fabs(fd + 1.0 / std::tan(x)) <= 1e-5, "x = ", x);
  }
}

TEST_CASE("concavity comparisons used by the volume ordering") {
  double l6 = lobachevsky_pi_fraction(1, 6, 1e-13).value;
  double l4 = lobachevsky_pi_fraction(1, 4, 1e-13).value;
  double l3 = lobachevsky_pi_fraction(1, 3, 1e-13).value;
  double l2 = lobachevsky_pi_fraction(1, 2, 1e-13).value;
  CHECK(2 * l4 + l2 < 3 * l3);
  // Midpoint concavity between pi/3 and pi/6 compares against pi/4.
  CHECK((l3 + l6) / 2 < l4);
  CHECK(l3 + l6 < 2 * l4);
  CHECK(l6 > l3);
}

TEST_CASE("ideal tetrahedron volumes of the three simplices") {
  VolumeValue p1 = ideal_tetrahedron_volume({kPi / 2, kPi / 3, kPi / 6}, 1e-12);
  CHECK(std::fabs(p1.value - (kLpi3 + kLpi6)) <= 1e-10);
  VolumeValue p2 = ideal_tetrahedron_volume({kPi / 2, kPi / 4, kPi / 4}, 1e-12);
  CHECK(std::fabs(p2.value - 2 * kLpi4) <= 1e-10);
  VolumeValue p3 = ideal_tetrahedron_volume({kPi / 3, kPi / 3, kPi / 3}, 1e-12);
  CHECK(std::fabs(p3.value - 3 * kLpi3) <= 1e-10);
  CHECK(std::fabs(p3.value - 1.0149416064096536) <= 1e-10);
  CHECK(p1.error_bound <= 3e-12);
  CHECK_THROWS_AS(ideal_tetrahedron_volume({kPi / 2, kPi / 2, kPi / 2}, 1e-12), DomainError);
  CHECK_THROWS_AS(ideal_tetrahedron_volume({-kPi / 4, kPi / 2, 3 * kPi / 4}, 1e-12), DomainError);
}

TEST_CASE("catalog volumes and the doubling identities") {
  VolumeValue p1 = catalog_volume("P1", 1e-12);
  VolumeValue p2 = catalog_volume("P2", 1e-12);
  VolumeValue p3 = catalog_volume("P3", 1e-12);
  VolumeValue p4 = catalog_volume("P4", 1e-12);
  VolumeValue p5 = catalog_volume("P5", 1e-12);
  CHECK(std::fabs(p1.value - 0.8457846720080426) <= 1e-10);
  CHECK(std::fabs(p2.value - 0.9159655941772190) <= 1e-10);  // Catalan's constant
  CHECK(p4.value == 2 * p1.value);
  CHECK(p5.value == 2 * p2.value);
  // Strict ordering with margins beyond the summed error bounds.
  const VolumeValue* order[] = {&p1, &p2, &p3, &p4, &p5};
  for (int i = 0; i + 1 < 5; ++i)
    CHECK(order[i]->value + order[i]->error_bound <
          order[i + 1]->value - order[i + 1]->error_bound);
  CHECK_THROWS_AS(catalog_volume("OCT", 1e-12), DomainError);
  CHECK_THROWS_AS(catalog_volume("P9", 1e-12), DomainError);
}

TEST_CASE("tolerance handling") {
  CHECK_THROWS_AS(lobachevsky(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(lobachevsky(1.0, -1e-9), DomainError);
  CHECK_THROWS_AS(lobachevsky_quadrature(0.0, 1e-10), DomainError);
  CHECK_THROWS_AS(lobachevsky_quadrature(kPi, 1e-10), DomainError);
  // Requested certification below the double floor is refused, not faked.
  CHECK_THROWS_AS(lobachevsky(1.0, 1e-17), DomainError);
}
