// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "icox/glue.hpp"
#include "icox/growth.hpp"
#include "icox/oracle.hpp"
#include "icox/roots.hpp"
#include "icox/volume.hpp"
#include "test_util.hpp"

using namespace icox;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
};

#define REQUIRE_THAT(cond, msg)                         \
  do {                                                  \
    if (!(cond)) {                                      \
      out.pass = false;                                 \
      out.note << "    failed: " << (msg) << "\n";      \
    }                                                   \
  } while (0)

Rat tol10() { return make_rat(1, 10000000000L); }

bool tau_within(const RootCertificate& cert, const char* decimal, const Rat& eps) {
  Rat target = parse_rational(decimal);
  Rat lo = cert.tau.lo - target, hi = cert.tau.hi - target;
  if (lo < 0) lo = -lo;
  if (hi < 0) hi = -hi;
  return lo < eps && hi < eps;
}

Outcome criterion1() {
  Outcome out;
  REQUIRE_THAT(g_polynomial(compute_invariants(catalog("P1"))).str() ==
                   "6t^7+2t^6+8t^5+4t^4+4t^3+2t-2",
               "g(P1) rendering");
  REQUIRE_THAT(g_polynomial(compute_invariants(catalog("P2"))).str() ==
                   "6t^7+2t^6+8t^5+8t^3+2t-2",
               "g(P2) rendering");
  REQUIRE_THAT(g_polynomial(compute_invariants(catalog("P3"))).str() ==
                   "6t^7+2t^6+4t^5+8t^4+4t^2+2t-2",
               "g(P3) rendering");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const std::pair<const char*, const char*> expected[] = {
      {"P1", "2.030735"}, {"P2", "2.130395"}, {"P3", "2.302776"},
      {"P4", "2.747380"}, {"P5", "2.845466"},
  };
  Rat eps = make_rat(1, 100000);
  for (const auto& [name, decimal] : expected) {
    RootCertificate cert = growth_rate(catalog(name), tol10());
    REQUIRE_THAT(tau_within(cert, decimal, eps),
                 std::string(name) + " enclosure misses " + decimal);
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::vector<RootCertificate> certs;
  for (const char* name : {"P1", "P2", "P3", "P4", "P5"})
    certs.push_back(growth_rate(catalog(name), tol10()));
  for (std::size_t i = 0; i + 1 < certs.size(); ++i)
    REQUIRE_THAT(certs[i].tau.hi < certs[i + 1].tau.lo,
                 "enclosures " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                     " not disjointly ordered");
  return out;
}

Outcome criterion4() {
  Outcome out;
  InvariantVector oct = compute_invariants(catalog("OCT"));
  IntPolynomial expected = IntPolynomial::constant(2) * IntPolynomial{1, 0, 1} *
                           IntPolynomial{1, 0, 1, 0, 1} * IntPolynomial{-1, 5};
  REQUIRE_THAT(g_polynomial(oct) == expected, "g(OCT) factorization 2(t^2+1)(t^4+t^2+1)(5t-1)");
  REQUIRE_THAT(right_angled_rate(catalog("OCT")) == 5, "right-angled rate f-3");
  RootCertificate cert = growth_rate(oct, tol10());
  REQUIRE_THAT(cert.tau.exact() && cert.tau.lo == 5, "tau(OCT) exactly 5");
  return out;
}

PolyhedronCombinatorics glued_p4() {
  FaceMatching m;
  m.face_p = 0;
  m.face_q = 0;
  m.pairs = {{1, 3}, {2, 2}, {3, 1}};
  return glue(catalog("P1"), catalog("P1"), m);
}

PolyhedronCombinatorics glued_p5() {
  PolyhedronCombinatorics P2 = catalog("P2");
  FaceProfile fp = face_profile(P2, 0);
  FaceMatching m;
  m.face_p = 0;
  m.face_q = 0;
  for (int x : fp.boundary_neighbors) m.pairs.push_back({x, x});
  return glue(P2, P2, m);
}

Outcome criterion5() {
  Outcome out;
  for (const auto& name : catalog_names()) {
    RootCertificate cert = growth_rate(catalog(name), tol10());
    REQUIRE_THAT(cert.perron && cert.modulus_gap > 0, std::string(name) + " perron certificate");
  }
  for (const PolyhedronCombinatorics& glued : {glued_p4(), glued_p5()}) {
    RootCertificate cert = growth_rate(glued, tol10());
    REQUIRE_THAT(cert.perron && cert.modulus_gap > 0, glued.name + " perron certificate");
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  for (const auto& name : catalog_names()) {
    InvariantVector iv = compute_invariants(catalog(name));
    REQUIRE_THAT(steinberg_growth(iv) == closed_form_growth(iv),
                 std::string(name) + " route equality");
  }
  auto ivs = testutil::random_consistent_invariants(50, 424242);
  int agreements = 0;
  for (const auto& iv : ivs)
    if (steinberg_growth(iv) == closed_form_growth(iv)) ++agreements;
  REQUIRE_THAT(agreements == static_cast<int>(ivs.size()),
               "route equality on randomized invariant vectors");
  return out;
}

Outcome criterion7() {
  Outcome out;
  for (const char* name : {"P1", "P2", "P3", "OCT"}) {
    PolyhedronCombinatorics P = catalog(name);
    GrowthSample sample = bfs_growth(coxeter_matrix(P), 6);
    auto series = series_coefficients(closed_form_growth(compute_invariants(P)), 6);
    REQUIRE_THAT(sample.counts == series, std::string(name) + " enumeration vs series");
  }
  GrowthSample p3 = bfs_growth(coxeter_matrix(catalog("P3")), 3);
  REQUIRE_THAT(p3.counts == (std::vector<Int>{1, 4, 12, 30}), "P3 prefix 1,4,12,30");
  return out;
}

Outcome criterion8() {
  Outcome out;
  PolyhedronCombinatorics g4 = glued_p4();
  PolyhedronCombinatorics g5 = glued_p5();
  REQUIRE_THAT(is_isomorphic(g4, catalog("P4")), "glue(P1,P1) isomorphic to P4");
  REQUIRE_THAT(is_isomorphic(g5, catalog("P5")), "glue(P2,P2) isomorphic to P5");

  // Like-label matching: all four identities must hold exactly.
  PolyhedronCombinatorics P2 = catalog("P2");
  FaceProfile fp = face_profile(P2, 0);
  FaceMatching m5;
  m5.face_p = 0;
  m5.face_q = 0;
  for (int x : fp.boundary_neighbors) m5.pairs.push_back({x, x});
  GlueIdentityReport ids = glue_identities_check(P2, P2, m5, g5);
  bool all_pass = true;
  for (const auto& c : ids.checks) all_pass = all_pass && c.status == CheckStatus::Pass;
  REQUIRE_THAT(all_pass, "all four bookkeeping identities on the like-label matching");

  RateMonotonicityReport t4 = rate_monotonicity_check(catalog("P1"), catalog("P1"), g4, tol10());
  REQUIRE_THAT(t4.ok(), "tau monotonicity for glue(P1,P1)");
  RateMonotonicityReport t5 = rate_monotonicity_check(P2, P2, g5, tol10());
  REQUIRE_THAT(t5.ok(), "tau monotonicity for glue(P2,P2)");
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::vector<PolyhedronCombinatorics> models;
  for (const auto& name : catalog_names()) models.push_back(catalog(name));
  models.push_back(glued_p4());
  models.push_back(glued_p5());
  for (const auto& P : models) {
    ValidationReport rep = validate(P);
    REQUIRE_THAT(rep.ok(), P.name + " identity suite");
  }
  // classify_cusp accepts exactly the four admissible patterns.
  const int labels[4] = {2, 3, 4, 6};
  int accepted3 = 0, accepted4 = 0;
  for (int a : labels)
    for (int b : labels)
      for (int c : labels) {
        PolyhedronCombinatorics T =
            make_polyhedron("T", 4, {{0, 1, a}, {1, 2, b}, {0, 2, c}}, {});
        try {
          classify_cusp({0, 1, 2}, T);
          ++accepted3;
        } catch (const DomainError&) {
        }
        for (int d : labels) {
          PolyhedronCombinatorics Q =
              make_polyhedron("Q", 4, {{0, 1, a}, {1, 2, b}, {2, 3, c}, {0, 3, d}}, {});
          try {
            classify_cusp({0, 1, 2, 3}, Q);
            ++accepted4;
          } catch (const DomainError&) {
          }
        }
      }
  // Orderings of {3,3,3}: 1; {2,4,4}: 3; {2,3,6}: 6 => 10 admissible triples.
  REQUIRE_THAT(accepted3 == 10, "triangular link patterns (got " + std::to_string(accepted3) + ")");
  REQUIRE_THAT(accepted4 == 1, "quadrilateral link patterns (got " + std::to_string(accepted4) + ")");
  return out;
}

Outcome criterion10() {
  Outcome out;
  constexpr double kPi = std::numbers::pi;
  REQUIRE_THAT(std::fabs(lobachevsky(kPi / 2, 1e-12).value) <= 1e-12, "L(pi/2) = 0 at 1e-12");
  bool grid_ok = true;
  for (int k = 1; k <= 100; ++k) {
    double x = kPi * k / 101.0;
    if (std::fabs(lobachevsky(x, 1e-12).value - lobachevsky_quadrature(x, 1e-10)) > 1e-9)
      grid_ok = false;
  }
  REQUIRE_THAT(grid_ok, "series vs quadrature within 1e-9 on 100 grid points");

  bool fd_ok = true;
  const double h1 = 1e-4, h2 = 1e-3;
  for (int j = 1; j <= 10; ++j) {
    double x = kPi / 6 + j * (kPi / 3) / 11.0;
    double d1 = (lobachevsky(x + h1, 1e-13).value - lobachevsky(x - h1, 1e-13).value) / (2 * h1);
    if (std::fabs(d1 + std::log(2.0 * std::sin(x))) > 5e-8) fd_ok = false;
    double d2 = (lobachevsky(x + h2, 1e-13).value - 2 * lobachevsky(x, 1e-13).value +
                 lobachevsky(x - h2, 1e-13).value) /
                (h2 * h2);
    if (std::fabs(d2 + 1.0 / std::tan(x)) > 1e-5) fd_ok = false;
  }
  REQUIRE_THAT(fd_ok, "finite-difference derivative checks at O(h^2)");

  VolumeValue vols[5];
  const char* names[5] = {"P1", "P2", "P3", "P4", "P5"};
  for (int i = 0; i < 5; ++i) vols[i] = catalog_volume(names[i], 1e-12);
  bool ordered = true;
  for (int i = 0; i + 1 < 5; ++i)
    if (!(vols[i].value + vols[i].error_bound < vols[i + 1].value - vols[i + 1].error_bound))
      ordered = false;
  REQUIRE_THAT(ordered, "volume ordering with certified margins");
  REQUIRE_THAT(vols[3].value == 2 * vols[0].value, "vol(P4) = 2 vol(P1) by construction");
  REQUIRE_THAT(vols[4].value == 2 * vols[1].value, "vol(P5) = 2 vol(P2) by construction");
  return out;
}

Outcome criterion11() {
  Outcome out;
  for (const char* name : {"P1", "P2", "P3", "P4", "P5"}) {
    SignCheckReport rep = growth_sign_checks(catalog(name), 64);
    bool no_skip = true;
    for (const auto& c : rep.checks) no_skip = no_skip && c.status != CheckStatus::Skip;
    REQUIRE_THAT(rep.ok() && no_skip, std::string(name) + " spot checks");
  }
  SignCheckReport oct = growth_sign_checks(catalog("OCT"), 64);
  bool has_skip = false;
  for (const auto& c : oct.checks) has_skip = has_skip || c.status == CheckStatus::Skip;
  REQUIRE_THAT(oct.ok() && has_skip, "OCT right-angled exemption");
  return out;
}

struct Criterion {
  int number;
  const char* description;
  std::function<Outcome()> run;
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact growth-polynomial reproduction for P1, P2, P3", criterion1, 1.0},
      {2, "certified growth rates match the published decimals at 1e-5", criterion2, 5.0},
      {3, "tau(P1) < ... < tau(P5) with disjoint certified enclosures", criterion3, 0.0},
      {4, "octahedron factorization and exact rate 5", criterion4, 0.0},
      {5, "Perron certificates with positive gaps (catalog + glued)", criterion5, 0.0},
      {6, "subgroup sum equals closed form (catalog + 50 randomized)", criterion6, 0.0},
      {7, "enumeration oracle matches series through depth 6", criterion7, 30.0},
      {8, "gluing round-trips, identities, and rate monotonicity", criterion8, 0.0},
      {9, "identity suite and cusp-link classification property", criterion9, 0.0},
      {10, "volume suite (zero, agreement, derivatives, ordering)", criterion10, 10.0},
      {11, "sampled sign profile of g with the right-angled exemption", criterion11, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note << "    exception: " << e.what() << "\n";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = c.budget_seconds <= 0.0 || elapsed < c.budget_seconds;
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::printf("CRITERION %2d: %s  %s (%.2fs)\n", c.number, pass ? "PASS" : "FAIL",
                c.description, elapsed);
    if (!out.pass) std::fputs(out.note.str().c_str(), stdout);
    if (!in_budget)
      std::printf("    failed: exceeded the %.0fs runtime budget\n", c.budget_seconds);
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria pass\n", criteria.size());
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
