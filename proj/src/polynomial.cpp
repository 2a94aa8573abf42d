#include "icox/polynomial.hpp"

#include <algorithm>

namespace icox {

namespace {
const Int kZero = 0;
}  // namespace

IntPolynomial poly_rem_primitive(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Rat> r(a.coefficients().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = Rat(a.coefficients()[i]);
  int db = b.degree();
  Rat lead(b.leading());
  int dr = a.degree();
  while (dr >= db) {
    Rat q = r[dr] / lead;
    for (int k = 0; k <= db; ++k) r[dr - db + k] -= q * Rat(b.coefficients()[k]);
    r[dr] = 0;  // cancel exactly
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  if (dr < 0) return IntPolynomial();
  // Clear denominators, then strip the content.
  Int lcm = 1;
  for (int k = 0; k <= dr; ++k) {
    Int den = r[k].get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> c(dr + 1);
  for (int k = 0; k <= dr; ++k) {
    Rat v = r[k] * Rat(lcm);
    c[k] = v.get_num();
  }
  return IntPolynomial(std::move(c)).primitive_part();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long v : ascending) coeffs_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_ = {c};
  return p;
}

IntPolynomial IntPolynomial::monomial(const Int& c, int degree) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Int(0));
    p.coeffs_[degree] = c;
  }
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

const Int& IntPolynomial::leading() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> c(coeffs_);
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
  if (k == 0) return IntPolynomial();
  std::vector<Int> c(coeffs_);
  for (auto& v : c) v *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Int& c, const IntPolynomial& p) { return p * c; }

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<Int> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
  return IntPolynomial(std::move(c));
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + Rat(*it);
  return v;
}

Int IntPolynomial::eval_int(const Int& x) const {
  Int v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Int g = content();
  std::vector<Int> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed(int min_degree) const {
  int d = std::max(degree(), min_degree);
  if (d < 0) return IntPolynomial();
  std::vector<Int> c(d + 1, Int(0));
  for (int k = 0; k <= degree(); ++k) c[d - k] = coeffs_[k];
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Rat> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = Rat(coeffs_[i]);
  int dd = divisor.degree();
  Rat lead(divisor.leading());
  std::vector<Rat> q(degree() - dd + 1);
  for (int dr = degree(); dr >= dd; --dr) {
    Rat f = r[dr] / lead;
    q[dr - dd] = f;
    if (f == 0) continue;
    for (int k = 0; k <= dd; ++k) r[dr - dd + k] -= f * Rat(divisor.coefficients()[k]);
  }
  for (const auto& rem : r)
    if (rem != 0) return std::nullopt;
  std::vector<Int> qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return std::nullopt;
    qi[i] = q[i].get_num();
  }
  return IntPolynomial(std::move(qi));
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? "-" : "+";
    }
    Int a = abs(c);
    if (k == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str();
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return IntPolynomial();
  if (a.is_zero() || b.is_zero()) {
    const IntPolynomial& p = a.is_zero() ? b : a;
    IntPolynomial r = p;
    if (r.leading() < 0) r = -r;
    return r;
  }
  Int cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPolynomial u = a.primitive_part(), v = b.primitive_part();
  while (!v.is_zero()) {
    IntPolynomial r = poly_rem_primitive(u, v);
    u = v;
    v = r;
  }
  if (u.leading() < 0) u = -u;
  return u * cg;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  IntPolynomial g = poly_gcd(p, p.derivative());
  auto q = p.divide_exact(g);
  if (!q) {
    // gcd is primitive; the content of p survives in the quotient over Q.
    q = p.primitive_part().divide_exact(g.primitive_part());
  }
  if (!q) throw InternalContradiction("square_free_part: gcd does not divide");
  return *q;
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  IntPolynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0 || g.content() != 1) {
    auto qn = num_.divide_exact(g);
    auto qd = den_.divide_exact(g);
    if (!qn || !qd) throw InternalContradiction("canonicalize: gcd does not divide");
    num_ = *qn;
    den_ = *qd;
  }
  Int cg;
  mpz_gcd(cg.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
  if (cg > 1) {
    auto qn = num_.divide_exact(IntPolynomial::constant(cg));
    auto qd = den_.divide_exact(IntPolynomial::constant(cg));
    num_ = *qn;
    den_ = *qd;
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::from_poly(IntPolynomial p) {
  return RationalFunction(std::move(p), IntPolynomial::constant(1));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::substitute_reciprocal() const {
  int d = std::max(num_.degree(), den_.degree());
  return RationalFunction(num_.reversed(d), den_.reversed(d));
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero()) throw DomainError("reciprocal of zero");
  return RationalFunction(den_, num_);
}

Rat RationalFunction::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw DomainError("evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::vector<Int> series_coefficients(const RationalFunction& F, int n) {
  if (n < 0) throw DomainError("series order must be nonnegative");
  const IntPolynomial& N = F.num();
  const IntPolynomial& D = F.den();
  if (D.coeff(0) == 0) throw DomainError("series: denominator has zero constant term");
  std::vector<Rat> a(n + 1);
  Rat d0(D.coeff(0));
  for (int j = 0; j <= n; ++j) {
    Rat s(N.coeff(j));
    for (int k = 1; k <= std::min(j, D.degree()); ++k) s -= Rat(D.coeff(k)) * a[j - k];
    a[j] = s / d0;
  }
  std::vector<Int> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (a[j].get_den() != 1)
      throw DomainError("series: coefficient a_" + std::to_string(j) + " is not an integer");
    out[j] = a[j].get_num();
  }
  return out;
}

}  // namespace icox
