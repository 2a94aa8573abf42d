#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "icox/growth.hpp"
#include "icox/oracle.hpp"
#include "test_util.hpp"

using namespace icox;

namespace {

bool is_identity(const QMatrix& m) { return m == QMatrix::identity(m.n); }

int product_order(const QMatrix& a, const QMatrix& b, int cap) {
  QMatrix p = a * b;
  QMatrix acc = p;
  for (int k = 1; k <= cap; ++k) {
    if (is_identity(acc)) return k;
    acc = acc * p;
  }
  return 0;  // no order found up to cap
}

}  // namespace

TEST_CASE("coxeter matrices of the catalog models") {
  CoxeterMatrix m1 = coxeter_matrix(catalog("P1"));
  CHECK(m1.n == 4);
  for (int s = 0; s < 4; ++s) CHECK(m1.order(s, s) == 1);
  std::vector<int> off;
  for (int s = 0; s < 4; ++s)
    for (int t = s + 1; t < 4; ++t) off.push_back(m1.order(s, t));
  std::sort(off.begin(), off.end());
  CHECK(off == std::vector<int>{2, 2, 3, 3, 6, 6});

  CoxeterMatrix moct = coxeter_matrix(catalog("OCT"));
  CHECK(moct.n == 8);
  int twos = 0, inf = 0;
  for (int s = 0; s < 8; ++s)
    for (int t = s + 1; t < 8; ++t) {
      if (moct.order(s, t) == 2) ++twos;
      if (moct.order(s, t) == CoxeterMatrix::kInfinity) ++inf;
    }
  CHECK(twos == 12);
  CHECK(inf == 16);

  // The base face of P5 meets every lateral face at pi/4.
  CoxeterMatrix m5 = coxeter_matrix(catalog("P5"));
  for (int t = 0; t < 4; ++t) CHECK(m5.order(4, t) == 4);
}

TEST_CASE("quadratic field arithmetic is exact") {
  QuadraticFieldNumber r2(Rat(0), Rat(1));
  QuadraticFieldNumber r3(Rat(0), Rat(0), Rat(1));
  QuadraticFieldNumber r6(Rat(0), Rat(0), Rat(0), Rat(1));
  CHECK(r2 * r2 == QuadraticFieldNumber(Rat(2)));
  CHECK(r3 * r3 == QuadraticFieldNumber(Rat(3)));
  CHECK(r2 * r3 == r6);
  CHECK(r6 * r6 == QuadraticFieldNumber(Rat(6)));
  CHECK(r2 * r6 == QuadraticFieldNumber(Rat(0), Rat(0), Rat(2)));
  QuadraticFieldNumber x(make_rat(1, 2), make_rat(-1, 3), Rat(2), Rat(0));
  CHECK(x - x == QuadraticFieldNumber());
  CHECK((x + x) * QuadraticFieldNumber(make_rat(1, 2)) == x);
}

TEST_CASE("generators are involutions with the prescribed product orders") {
  for (const char* name : {"P1", "P2", "P3", "P4", "P5", "OCT"}) {
    CoxeterMatrix M = coxeter_matrix(catalog(name));
    auto gens = canonical_representation(M);
    REQUIRE(static_cast<int>(gens.size()) == M.n);
    for (int s = 0; s < M.n; ++s) CHECK(is_identity(gens[s] * gens[s]));
    for (int s = 0; s < M.n; ++s)
      for (int t = s + 1; t < M.n; ++t) {
        int m = M.order(s, t);
        if (m == CoxeterMatrix::kInfinity) {
          CHECK(product_order(gens[s], gens[t], 12) == 0);
        } else {
          CHECK(product_order(gens[s], gens[t], 2 * m) == m);
        }
      }
  }
}

TEST_CASE("breadth-first growth counts for the simplices") {
  GrowthSample p3 = bfs_growth(coxeter_matrix(catalog("P3")), 3);
  CHECK(p3.depth == 3);
  CHECK(p3.counts == std::vector<Int>{1, 4, 12, 30});

  GrowthSample trivial = bfs_growth(coxeter_matrix(catalog("P1")), 0);
  CHECK(trivial.counts == std::vector<Int>{1});

  GrowthSample p1 = bfs_growth(coxeter_matrix(catalog("P1")), 1);
  CHECK(p1.counts == std::vector<Int>{1, 4});
}

TEST_CASE("enumeration matches the series expansion through depth six") {
  for (const char* name : {"P1", "P2", "P3", "OCT"}) {
    PolyhedronCombinatorics P = catalog(name);
    GrowthSample sample = bfs_growth(coxeter_matrix(P), 6);
    auto series = series_coefficients(closed_form_growth(compute_invariants(P)), 6);
    CHECK_MESSAGE(sample.counts == series, name);
  }
}

TEST_CASE("sphere sizes stay positive on catalog models") {
  GrowthSample p5 = bfs_growth(coxeter_matrix(catalog("P5")), 5);
  for (const auto& a : p5.counts) CHECK(a >= 1);
}

TEST_CASE("the element cap aborts with the completed depth") {
  CHECK_THROWS_WITH_AS(bfs_growth(coxeter_matrix(catalog("P1")), 6, 20),
                       doctest::Contains("completed depth"), LimitError);
  CHECK_THROWS_AS(bfs_growth(coxeter_matrix(catalog("P1")), -1), DomainError);
}
