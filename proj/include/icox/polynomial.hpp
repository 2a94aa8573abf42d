#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "icox/numeric.hpp"

namespace icox {

// Dense univariate polynomial with exact integer coefficients.
// coefficients()[k] is the coefficient of t^k; the zero polynomial has an
// empty coefficient vector and degree() == -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  // Ascending-degree convenience constructor: {-2, 3} is 3t - 2.
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const Int& c);
  static IntPolynomial monomial(const Int& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(int k) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }
  const Int& leading() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Int& c) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  IntPolynomial derivative() const;
  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;

  // gcd of all coefficients, always >= 0 (0 for the zero polynomial).
  Int content() const;
  // this / content(); sign of the leading coefficient is preserved.
  IntPolynomial primitive_part() const;

  // t^d * p(1/t) with d = max(degree, min_degree): the coefficient reversal.
  IntPolynomial reversed(int min_degree = -1) const;

  // Exact quotient with integer coefficients, or nullopt when the division
  // leaves a remainder or fractional coefficients.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  // Descending-degree rendering with explicit signs, e.g.
  // "6t^7+2t^6+8t^5+4t^4+4t^3+2t-2". The zero polynomial renders "0".
  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Int> coeffs_;
};

IntPolynomial operator*(const Int& c, const IntPolynomial& p);

// True gcd in Z[t] (content gcd times primitive gcd), normalized to a
// positive leading coefficient. gcd(0, p) = |p| up to sign normalization.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Remainder of a by b over Q, scaled by a positive rational to a primitive
// integer polynomial. Positive scaling preserves the sign structure that
// Sturm-type arguments rely on.
IntPolynomial poly_rem_primitive(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'): same distinct roots, all simple.
IntPolynomial square_free_part(const IntPolynomial& p);

// Quotient of two integer polynomials, kept in a canonical form: the
// numerator and denominator share no polynomial factor, the pair shares no
// integer content, and the denominator's leading coefficient is positive.
// Equality of canonical forms is structural.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}
  RationalFunction(IntPolynomial num, IntPolynomial den);
  static RationalFunction from_poly(IntPolynomial p);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // F(1/t), again in canonical form.
  RationalFunction substitute_reciprocal() const;
  RationalFunction reciprocal() const;

  Rat eval(const Rat& x) const;  // throws DomainError at a pole

  // "(<num>)/(<den>)"
  std::string str(const std::string& var = "t") const;

private:
  IntPolynomial num_, den_;
};

// Taylor coefficients a_0..a_n of F at t = 0 via the denominator's linear
// recurrence. Requires den(0) != 0 and integer coefficients (growth series).
std::vector<Int> series_coefficients(const RationalFunction& F, int n);

}  // namespace icox
