#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "icox/glue.hpp"
#include "test_util.hpp"

using namespace icox;

namespace {

FaceMatching matching(int fa, int fb, std::vector<std::pair<int, int>> pairs) {
  FaceMatching m;
  m.face_p = fa;
  m.face_q = fb;
  m.pairs = std::move(pairs);
  return m;
}

CheckStatus status_of(const std::vector<CheckResult>& checks, const std::string& prefix) {
  for (const auto& c : checks)
    if (c.name.rfind(prefix, 0) == 0) return c.status;
  FAIL("no check named ", prefix);
  return CheckStatus::Fail;
}

}  // namespace

TEST_CASE("matching shape validation") {
  PolyhedronCombinatorics P1 = catalog("P1");
  // Face 0 of P1 meets 1 (pi/3), 2 (pi/2), 3 (pi/6).
  CHECK_NOTHROW(check_matching_shape(P1, P1, matching(0, 0, {{1, 3}, {2, 2}, {3, 1}})));
  CHECK_NOTHROW(check_matching_shape(P1, P1, matching(0, 0, {{1, 1}, {2, 2}, {3, 3}})));
  CHECK_THROWS_AS(check_matching_shape(P1, P1, matching(0, 0, {{1, 3}, {2, 2}})), DomainError);
  CHECK_THROWS_AS(check_matching_shape(P1, P1, matching(0, 0, {{1, 3}, {2, 3}, {3, 1}})),
                  DomainError);
  CHECK_THROWS_AS(check_matching_shape(P1, P1, matching(0, 0, {{1, 0}, {2, 2}, {3, 1}})),
                  DomainError);
  // Length 4 boundaries can fail the consecutivity requirement.
  PolyhedronCombinatorics P5 = catalog("P5");
  FaceProfile base = face_profile(P5, 4);
  auto n = base.boundary_neighbors;  // walk order around the square
  CHECK_NOTHROW(
      check_matching_shape(P5, P5, matching(4, 4, {{n[0], n[0]}, {n[1], n[1]}, {n[2], n[2]}, {n[3], n[3]}})));
  CHECK_THROWS_WITH_AS(
      check_matching_shape(P5, P5, matching(4, 4, {{n[0], n[0]}, {n[1], n[1]}, {n[2], n[3]}, {n[3], n[2]}})),
      doctest::Contains("consecutive"), DomainError);
}

TEST_CASE("label combination rules") {
  PolyhedronCombinatorics P1 = catalog("P1");
  PolyhedronCombinatorics P2 = catalog("P2");
  // P1 * P1 with 2<->2, 3<->6, 6<->3 passes all rules.
  GlueCheckReport good = check_glueable(P1, P1, matching(0, 0, {{1, 3}, {2, 2}, {3, 1}}));
  CHECK(good.glueable());
  // Pairing pi/3 with pi/3 gives 2pi/3: rejected.
  GlueCheckReport bad = check_glueable(P1, P1, matching(0, 0, {{1, 1}, {2, 2}, {3, 3}}));
  CHECK_FALSE(bad.glueable());
  // P2 * P2 like-label: 2<->2 merge, 4<->4 -> pi/2.
  FaceProfile f2 = face_profile(P2, 0);
  std::vector<std::pair<int, int>> same;
  for (int x : f2.boundary_neighbors) same.push_back({x, x});
  CHECK(check_glueable(P2, P2, matching(0, 0, same)).glueable());
}

TEST_CASE("gluing two P1 copies yields the first pyramid") {
  PolyhedronCombinatorics P1 = catalog("P1");
  FaceMatching m = matching(0, 0, {{1, 3}, {2, 2}, {3, 1}});
  PolyhedronCombinatorics glued = glue(P1, P1, m);
  CHECK(glued.face_count == 5);
  CHECK(validate(glued).ok());
  CHECK(is_isomorphic(glued, catalog("P4")));

  GlueIdentityReport ids = glue_identities_check(P1, P1, m, glued);
  CHECK(ids.ok());
  CHECK(status_of(ids.checks, "identity c(glued)") == CheckStatus::Pass);
  CHECK(status_of(ids.checks, "identity c9(glued)") == CheckStatus::Skip);  // mixed 3<->6 pairing
  CHECK(status_of(ids.checks, "identity c10(glued)") == CheckStatus::Pass);
  CHECK(status_of(ids.checks, "identity f(glued)") == CheckStatus::Pass);
}

TEST_CASE("gluing two P2 copies yields the second pyramid") {
  PolyhedronCombinatorics P2 = catalog("P2");
  FaceProfile f2 = face_profile(P2, 0);
  std::vector<std::pair<int, int>> same;
  for (int x : f2.boundary_neighbors) same.push_back({x, x});
  FaceMatching m = matching(0, 0, same);
  PolyhedronCombinatorics glued = glue(P2, P2, m);
  CHECK(validate(glued).ok());
  CHECK(is_isomorphic(glued, catalog("P5")));

  GlueIdentityReport ids = glue_identities_check(P2, P2, m, glued);
  CHECK(ids.ok());
  for (const auto& c : ids.checks) CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("gluing two P5 copies along the square bases yields the octahedron") {
  PolyhedronCombinatorics P5 = catalog("P5");
  auto matchings = enumerate_matchings(P5, P5, 4, 4);
  REQUIRE_FALSE(matchings.empty());
  PolyhedronCombinatorics glued = glue(P5, P5, matchings.front());
  CHECK(glued.face_count == 8);
  CHECK(glued.right_angled());
  CHECK(is_isomorphic(glued, catalog("OCT")));
}

TEST_CASE("failing matchings do not glue") {
  PolyhedronCombinatorics P1 = catalog("P1");
  CHECK_THROWS_WITH_AS(glue(P1, P1, matching(0, 0, {{1, 1}, {2, 2}, {3, 3}})),
                       doctest::Contains("not glueable"), DomainError);
}

TEST_CASE("automatic matching enumeration") {
  PolyhedronCombinatorics P1 = catalog("P1");
  PolyhedronCombinatorics P2 = catalog("P2");
  auto p1p1 = enumerate_matchings(P1, P1, 0, 0);
  CHECK(p1p1.size() == 1);  // only the 2<->2, 3<->6, 6<->3 alignment
  auto p2p2 = enumerate_matchings(P2, P2, 0, 0);
  CHECK(p2p2.size() == 2);  // the 4<->4 pairs can swap
  CHECK(enumerate_matchings(P1, P2, 0, 0).empty());
  // Boundary lengths differ: lateral face vs base square.
  CHECK(enumerate_matchings(catalog("P4"), catalog("P4"), 0, 4).empty());
}

TEST_CASE("monotonicity certification on the pyramid gluings") {
  PolyhedronCombinatorics P1 = catalog("P1");
  FaceMatching m1 = matching(0, 0, {{1, 3}, {2, 2}, {3, 1}});
  PolyhedronCombinatorics g1 = glue(P1, P1, m1);
  RateMonotonicityReport rep1 = rate_monotonicity_check(P1, P1, g1, make_rat(1, 100000000L));
  CHECK(rep1.tau_increases);
  CHECK(rep1.pointwise_dominance);
  CHECK(rep1.ok());

  PolyhedronCombinatorics P2 = catalog("P2");
  FaceProfile f2 = face_profile(P2, 0);
  std::vector<std::pair<int, int>> same;
  for (int x : f2.boundary_neighbors) same.push_back({x, x});
  FaceMatching m2 = matching(0, 0, same);
  PolyhedronCombinatorics g2 = glue(P2, P2, m2);
  RateMonotonicityReport rep2 = rate_monotonicity_check(P2, P2, g2, make_rat(1, 100000000L));
  CHECK(rep2.ok());
}

TEST_CASE("gluing is symmetric in its two arguments") {
  PolyhedronCombinatorics P1 = catalog("P1");
  PolyhedronCombinatorics forward = glue(P1, P1, matching(0, 0, {{1, 3}, {2, 2}, {3, 1}}));
  PolyhedronCombinatorics backward = glue(P1, P1, matching(0, 0, {{3, 1}, {2, 2}, {1, 3}}));
  CHECK(is_isomorphic(forward, backward));

  PolyhedronCombinatorics P4 = catalog("P4");
  PolyhedronCombinatorics P5 = catalog("P5");
  // Different polyhedra sharing a (3,6,3,6)-vs-(4,4,4,4) base cannot glue,
  // but P4 glues to itself along the base either way around.
  auto m44 = enumerate_matchings(P4, P4, 4, 4);
  REQUIRE_FALSE(m44.empty());
  PolyhedronCombinatorics g = glue(P4, P4, m44.front());
  CHECK(g.face_count == 8);
  CHECK(g.right_angled());
  CHECK(is_isomorphic(g, catalog("OCT")));
  CHECK(enumerate_matchings(P4, P5, 4, 4).empty());
}

TEST_CASE("every enumerable catalog gluing validates and raises the rate") {
  const std::vector<std::string>& names = catalog_names();
  int checked = 0;
  for (const auto& na : names)
    for (const auto& nb : names) {
      PolyhedronCombinatorics A = catalog(na);
      PolyhedronCombinatorics B = catalog(nb);
      for (int fa = 0; fa < A.face_count; ++fa)
        for (int fb = 0; fb < B.face_count; ++fb) {
          for (const auto& m : enumerate_matchings(A, B, fa, fb)) {
            PolyhedronCombinatorics glued = glue(A, B, m);
            CHECK(validate(glued).ok());
            GlueIdentityReport ids = glue_identities_check(A, B, m, glued);
            CHECK_MESSAGE(ids.ok(), na, "*", nb, " faces ", fa, ",", fb, "\n", ids.str());
            RateMonotonicityReport t6 = rate_monotonicity_check(A, B, glued, make_rat(1, 1000000));
            CHECK_MESSAGE(t6.ok(), na, "*", nb, " faces ", fa, ",", fb);
            ++checked;
            if (checked >= 12) return;  // plenty of coverage, keep the suite quick
          }
        }
    }
  CHECK(checked > 0);
}
