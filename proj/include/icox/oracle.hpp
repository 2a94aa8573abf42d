#pragma once

#include <string>
#include <vector>

#include "icox/combinatorics.hpp"
#include "icox/numeric.hpp"

namespace icox {

// Coxeter matrix of the reflection group: m(s,s) = 1, m(s,t) the edge label
// for adjacent faces, infinity (stored as 0) otherwise.
struct CoxeterMatrix {
  static constexpr int kInfinity = 0;

  int n = 0;
  std::vector<int> m;  // row-major n*n

  int order(int s, int t) const { return m[s * n + t]; }
};

CoxeterMatrix coxeter_matrix(const PolyhedronCombinatorics& P);

// Exact element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of Q(sqrt2, sqrt3).
// Closed under the cosines cos(pi/m) for m in {2,3,4,6}.
struct QuadraticFieldNumber {
  Rat a, b, c, d;

  QuadraticFieldNumber() : a(0), b(0), c(0), d(0) {}
  explicit QuadraticFieldNumber(Rat a_, Rat b_ = Rat(0), Rat c_ = Rat(0), Rat d_ = Rat(0))
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  bool operator==(const QuadraticFieldNumber& o) const = default;
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  QuadraticFieldNumber operator+(const QuadraticFieldNumber& o) const;
  QuadraticFieldNumber operator-(const QuadraticFieldNumber& o) const;
  QuadraticFieldNumber operator*(const QuadraticFieldNumber& o) const;

  std::string str() const;
};

// cos(pi/m) for m in {1, 2, 3, 4, 6}; m = CoxeterMatrix::kInfinity yields 1
// (the parabolic convention B(e_s, e_t) = -1 for non-adjacent generators).
QuadraticFieldNumber cos_pi_over(int m);

// Dense square matrix over the quadratic field.
struct QMatrix {
  int n = 0;
  std::vector<QuadraticFieldNumber> a;  // row-major

  static QMatrix identity(int n);
  const QuadraticFieldNumber& at(int r, int c) const { return a[r * n + c]; }
  QuadraticFieldNumber& at(int r, int c) { return a[r * n + c]; }
  QMatrix operator*(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;
};

// Generator matrices of the canonical geometric representation:
// sigma_s(e_t) = e_t - 2 B(e_s, e_t) e_s with B(e_s, e_t) = -cos(pi/m(s,t)).
std::vector<QMatrix> canonical_representation(const CoxeterMatrix& M);

struct GrowthSample {
  int depth = 0;
  std::vector<Int> counts;  // counts[j] = number of elements of word length j
};

// Sphere-by-sphere breadth-first enumeration of the group in the canonical
// representation, deduplicated by exact matrix equality. Throws LimitError
// (carrying the completed depth in the message) when the element cap is hit.
GrowthSample bfs_growth(const CoxeterMatrix& M, int depth, long long element_cap = 1000000);

}  // namespace icox
