#include "icox/growth.hpp"

namespace icox {

IntPolynomial bracket(int n) {
  if (n < 1) throw DomainError("bracket [n] needs n >= 1");
  std::vector<Int> c(n, Int(1));
  return IntPolynomial(std::move(c));
}

namespace {

IntPolynomial bracket_product(const std::vector<int>& ns) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int n : ns) p = p * bracket(n);
  return p;
}

}  // namespace

IntPolynomial finite_growth(const FiniteGroupSymbol& s) {
  switch (s.family) {
    case 'A': {
      if (s.rank < 1) throw DomainError("A_n needs n >= 1");
      std::vector<int> ns;
      for (int i = 2; i <= s.rank + 1; ++i) ns.push_back(i);
      return bracket_product(ns);
    }
    case 'B': {
      if (s.rank < 2) throw DomainError("B_n needs n >= 2");
      std::vector<int> ns;
      for (int i = 2; i <= 2 * s.rank; i += 2) ns.push_back(i);
      return bracket_product(ns);
    }
    case 'D': {
      if (s.rank < 2) throw DomainError("D_n needs n >= 2");
      std::vector<int> ns;
      for (int i = 2; i <= 2 * s.rank - 2; i += 2) ns.push_back(i);
      ns.push_back(s.rank);
      return bracket_product(ns);
    }
    case 'E':
      if (s.rank == 6) return bracket_product({2, 5, 6, 8, 9, 12});
      if (s.rank == 7) return bracket_product({2, 6, 8, 10, 12, 14, 18});
      if (s.rank == 8) return bracket_product({2, 8, 12, 14, 18, 20, 24, 30});
      throw DomainError("E_n needs n in {6,7,8}");
    case 'F':
      if (s.rank == 4) return bracket_product({2, 6, 8, 12});
      throw DomainError("F_n needs n = 4");
    case 'H':
      if (s.rank == 3) return bracket_product({2, 6, 10});
      if (s.rank == 4) return bracket_product({2, 12, 20, 30});
      throw DomainError("H_n needs n in {3,4}");
    case 'I':
      if (s.rank != 2) throw DomainError("I2(m) has rank 2");
      if (s.m < 3) throw DomainError("I2(m) needs m >= 3");
      return bracket_product({2, s.m});
    default:
      throw DomainError(std::string("unknown family symbol '") + s.family + "'");
  }
}

IntPolynomial g_polynomial(const InvariantVector& iv) {
  const long long f = iv.f, c = iv.c, c9 = iv.c9, c10 = iv.c10;
  std::vector<Int> coeffs(8);
  coeffs[7] = to_int(2 * c - 2);
  coeffs[6] = to_int(2 * c - 2 * f + 2);
  coeffs[5] = to_int(2 * c + 2 * f - c9 - 8);
  coeffs[4] = to_int(4 * c - 4 * f + c9 - c10 + 4);
  coeffs[3] = to_int(4 * f - c9 + c10 - 12);
  coeffs[2] = to_int(2 * c - 2 * f + c9);
  coeffs[1] = to_int(2 * f - 6);
  coeffs[0] = -2;
  return IntPolynomial(std::move(coeffs));
}

RationalFunction steinberg_growth(const InvariantVector& iv) {
  // 1/F(1/t) = 1 - f/[2] + e2/[2]^2 + e3/([2][3]) + e4/([2][4]) + e6/([2][6])
  auto term = [](long long count, const IntPolynomial& den) {
    return RationalFunction(IntPolynomial::constant(to_int(count)), den);
  };
  const IntPolynomial b2 = bracket(2);
  RationalFunction sum = RationalFunction::from_poly(IntPolynomial::constant(1));
  sum = sum - term(iv.f, b2);
  if (iv.e2) sum = sum + term(iv.e2, b2 * b2);
  if (iv.e3) sum = sum + term(iv.e3, b2 * bracket(3));
  if (iv.e4) sum = sum + term(iv.e4, b2 * bracket(4));
  if (iv.e6) sum = sum + term(iv.e6, b2 * bracket(6));
  return sum.substitute_reciprocal().reciprocal();
}

RationalFunction steinberg_growth(const PolyhedronCombinatorics& P) {
  return steinberg_growth(compute_invariants(P));
}

RationalFunction closed_form_growth(const InvariantVector& iv) {
  IntPolynomial num = IntPolynomial::constant(2) * bracket(2) * bracket(2) *
                      IntPolynomial{1, 0, 1} * IntPolynomial{1, 1, 1} * IntPolynomial{1, -1, 1};
  IntPolynomial den = IntPolynomial{-1, 1} * g_polynomial(iv);
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction closed_form_growth(const PolyhedronCombinatorics& P) {
  return closed_form_growth(compute_invariants(P));
}

Rat g_at_half(const InvariantVector& iv) {
  Rat direct = g_polynomial(iv).eval(make_rat(1, 2));
  Rat formula = make_rat(to_int(55 * iv.c + 50 * iv.f + 10 * iv.c9 + 4 * iv.c10 - 415), Int(64));
  if (direct != formula)
    throw InternalContradiction("g(1/2) closed form disagrees with direct evaluation");
  return direct;
}

}  // namespace icox
