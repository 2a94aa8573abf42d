#include "icox/volume.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "icox/numeric.hpp"

namespace icox {

namespace {

constexpr double kPi = std::numbers::pi;

// Coefficients of Lambda(x) = x - x log(2x) + sum_n coeff[n] x^{2n+1} with
// coeff[n] = 2^{2n} |B_{2n}| / (2n (2n+1) (2n)!), computed exactly from the
// Bernoulli recurrence and rounded once to double.
const std::vector<double>& log_series_coefficients() {
  static const std::vector<double> coeffs = [] {
    const int kTerms = 48;
    // B_m via sum_{k=0}^{m} C(m+1,k) B_k = 0, B_0 = 1.
    std::vector<Rat> B(2 * kTerms + 1);
    B[0] = Rat(1);
    for (int m = 1; m < static_cast<int>(B.size()); ++m) {
      Rat acc(0);
      Int binom = 1;  // C(m+1, 0)
      for (int k = 0; k < m; ++k) {
        acc += Rat(binom) * B[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      B[m] = -acc / Rat(binom);  // binom = C(m+1, m)
    }
    std::vector<double> out(kTerms + 1, 0.0);
    Int pow4 = 1;        // 4^n
    Int factorial = 1;   // (2n)!
    for (int n = 1; n <= kTerms; ++n) {
      pow4 *= 4;
      factorial = factorial * (2 * n - 1) * (2 * n);
      Rat c = Rat(pow4) * B[2 * n];
      if (c < 0) c = -c;
      c /= Rat(to_int(2LL * n * (2 * n + 1)) * factorial);
      out[n] = rat_to_double(c);
    }
    return out;
  }();
  return coeffs;
}

// Series evaluation on [0, pi/2]; returns value and a certified bound that
// covers both the truncated tail and double rounding.
LobachevskyValue eval_series(double y, double tol) {
  LobachevskyValue out;
  out.argument = y;
  if (y == 0.0) return out;

  const auto& coeffs = log_series_coefficients();
  double value = y - y * std::log(2.0 * y);
  double magnitude = std::fabs(value);
  // q strictly upper-bounds (y/pi)^2; term ratios are below q.
  double q = (y / 3.14159265) * (y / 3.14159265);
  double y2 = y * y;
  double power = y;  // y^{2n+1}
  double term = 0;
  std::size_t n = 1;
  for (; n < coeffs.size(); ++n) {
    power *= y2;
    term = coeffs[n] * power;
    value += term;
    magnitude += term;
    if (term < tol / 8 && n >= 2) break;
  }
  double tail = (n < coeffs.size()) ? term * q / (1.0 - q)
                                    : term * q / (1.0 - q) * 2.0;  // defensive slack at the cap
  double rounding = (static_cast<double>(n) + 4.0) * 1.2e-16 * (magnitude + std::fabs(value));
  out.value = value;
  out.error_bound = tail + rounding;
  if (out.error_bound > tol)
    throw DomainError("lobachevsky: cannot certify the requested tolerance");
  return out;
}

LobachevskyValue eval_reduced(double y, double tol, double reduction_slack) {
  // y in [0, pi); fold (pi/2, pi) through Lambda(pi - y) = -Lambda(y).
  bool flip = false;
  if (y > kPi / 2) {
    y = kPi - y;
    flip = true;
  }
  if (y < 0) y = 0;
  LobachevskyValue v = eval_series(y, tol);
  if (flip) {
    v.value = -v.value;
    v.argument = kPi - y;
  }
  v.error_bound += reduction_slack;
  return v;
}

}  // namespace

LobachevskyValue lobachevsky(double x, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!std::isfinite(x)) throw DomainError("argument must be finite");
  double y = std::fmod(x, kPi);
  if (y < 0) y += kPi;
  // fmod is exact; the only reduction error is the uncertainty of pi itself,
  // amplified by the number of periods removed.
  double periods = std::fabs(x - y) / kPi;
  double slack = (periods + 1.0) * 1e-15;
  return eval_reduced(y, tol, slack);
}

LobachevskyValue lobachevsky_pi_fraction(long p, long q, double tol) {
  if (q == 0) throw DomainError("zero denominator");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  Rat frac = make_rat(p, q);
  // Reduce modulo 1 exactly: frac - floor(frac).
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), frac.get_num().get_mpz_t(), frac.get_den().get_mpz_t());
  frac -= Rat(fl);
  double y = rat_to_double(frac) * kPi;
  return eval_reduced(y, tol, 1e-15);
}

namespace {

// Smooth part of the integrand after the log(2z) split.
double smooth_integrand(double z) {
  if (z == 0.0) return 0.0;
  return std::log(std::sin(z) / z);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = smooth_integrand(lm), frm = smooth_integrand(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0) throw DomainError("lobachevsky_quadrature: recursion depth exhausted");
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

// A(x) = int_0^x log(2 sin z) dz for 0 < x <= pi/2, via
// A(x) = x log(2x) - x + int_0^x log(sin z / z) dz.
double defining_integral(double x, double tol) {
  double fa = smooth_integrand(0.0), fb = smooth_integrand(x);
  double fm = smooth_integrand(0.5 * x);
  double whole = x / 6.0 * (fa + 4.0 * fm + fb);
  double smooth = adaptive_simpson(0.0, x, fa, fm, fb, whole, tol, 60);
  return x * std::log(2.0 * x) - x + smooth;
}

}  // namespace

double lobachevsky_quadrature(double x, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!(x > 0.0 && x < kPi)) throw DomainError("quadrature needs 0 < x < pi");
  if (x <= kPi / 2) return -defining_integral(x, tol);
  // int_{pi/2}^x log(2 sin z) dz = A(pi/2) - A(pi - x) by z -> pi - z.
  double ahalf = defining_integral(kPi / 2, tol / 2);
  double arest = (x == kPi / 2) ? ahalf : defining_integral(kPi - x, tol / 2);
  return -(2.0 * ahalf - arest);
}

std::string VolumeValue::str() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12f +/- %.2e", value, error_bound);
  return buf;
}

VolumeValue ideal_tetrahedron_volume(const TetrahedronAngles& angles, double tol) {
  const double sum = angles.alpha + angles.beta + angles.gamma;
  if (!(angles.alpha > 0 && angles.beta > 0 && angles.gamma > 0))
    throw DomainError("dihedral angles must be positive");
  if (std::fabs(sum - kPi) > 1e-12)
    throw DomainError("ideal tetrahedron angles must sum to pi");
  LobachevskyValue a = lobachevsky(angles.alpha, tol);
  LobachevskyValue b = lobachevsky(angles.beta, tol);
  LobachevskyValue c = lobachevsky(angles.gamma, tol);
  return {a.value + b.value + c.value, a.error_bound + b.error_bound + c.error_bound};
}

VolumeValue catalog_volume(const std::string& name, double tol) {
  auto L = [tol](long p, long q) { return lobachevsky_pi_fraction(p, q, tol); };
  if (name == "P1") {
    auto x = L(1, 3), y = L(1, 6);
    return {x.value + y.value, x.error_bound + y.error_bound};
  }
  if (name == "P2") {
    auto x = L(1, 4);
    return {2 * x.value, 2 * x.error_bound};
  }
  if (name == "P3") {
    auto x = L(1, 3);
    return {3 * x.value, 3 * x.error_bound};
  }
  if (name == "P4") {
    VolumeValue v = catalog_volume("P1", tol);
    return {2 * v.value, 2 * v.error_bound};
  }
  if (name == "P5") {
    VolumeValue v = catalog_volume("P2", tol);
    return {2 * v.value, 2 * v.error_bound};
  }
  if (name == "OCT")
    throw DomainError("no catalog decomposition for OCT volumes");
  throw DomainError("unknown catalog name: " + name);
}

}  // namespace icox
