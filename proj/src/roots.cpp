#include "icox/roots.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <sstream>

namespace icox {

namespace {

// Root on (or degeneracy touching) a rectangle boundary: jitter and retry.
struct BoundaryHit {};

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

int sgn_rat(const Rat& x) { return sgn(x); }

// Every root z of p satisfies |z| < 1 + max |a_k| / |a_n|.
Rat cauchy_bound(const IntPolynomial& p) {
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k)
    m = std::max(m, rat_abs(make_rat(p.coeff(k), p.leading())));
  return m + 1;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<IntPolynomial> chain;
  chain.push_back(p.primitive_part());
  if (q.is_zero()) return chain;
  chain.push_back(q.primitive_part());
  while (chain.back().degree() >= 1) {
    IntPolynomial r = poly_rem_primitive(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const Rat& x) {
  int variations = 0, prev = 0;
  for (const auto& s : chain) {
    int cur = sgn_rat(s.eval(x));
    if (cur == 0) continue;
    if (prev != 0 && cur != prev) ++variations;
    prev = cur;
  }
  return variations;
}

namespace {

// Distinct roots of the square-free w in (a, b], for non-root endpoints.
int count_real_roots(const std::vector<IntPolynomial>& chain, const Rat& a, const Rat& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// Divisors of |n| up to the trial-division cap; empty when out of reach.
std::vector<Int> small_divisors(const Int& n) {
  std::vector<Int> divs;
  Int a = abs(n);
  if (a == 0 || a > 1000000) return divs;
  for (Int d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      divs.push_back(d);
      divs.push_back(a / d);
    }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

// Exact rational roots of the square-free w, divided out of w as found.
std::vector<Rat> extract_rational_roots(IntPolynomial& w) {
  std::vector<Rat> roots;
  if (w.degree() < 1) return roots;
  if (w.coeff(0) == 0) {
    roots.emplace_back(0);
    auto q = w.divide_exact(IntPolynomial{0, 1});
    if (!q) throw InternalContradiction("t does not divide despite zero constant term");
    w = *q;
  }
  auto nums = small_divisors(w.coeff(0));
  auto dens = small_divisors(w.leading());
  if (nums.empty() || dens.empty()) return roots;  // coefficients too large; skip the pre-pass
  for (const Int& den : dens)
    for (const Int& num : nums)
      for (int s : {1, -1}) {
        if (w.degree() < 1) break;
        Rat cand = make_rat(s > 0 ? num : Int(-num), den);
        if (w.eval(cand) != 0) continue;
        roots.push_back(cand);
        IntPolynomial lin(std::vector<Int>{-cand.get_num(), cand.get_den()});
        auto q = w.primitive_part().divide_exact(lin);
        if (!q) throw InternalContradiction("rational root factor does not divide");
        w = *q;
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<RatInterval> sturm_isolate(const IntPolynomial& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  std::vector<RatInterval> out;
  if (!(lo < hi)) return out;
  IntPolynomial w = square_free_part(p).primitive_part();
  std::vector<Rat> exact = extract_rational_roots(w);
  for (const Rat& r : exact)
    if (lo < r && r < hi) out.push_back({r, r});

  if (w.degree() >= 1) {
    auto chain = sturm_chain(w, w.derivative());
    struct Seg {
      Rat a, b;
      int va, vb;
    };
    std::vector<Seg> stack;
    stack.push_back({lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)});
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      int count = s.va - s.vb;
      if (count <= 0) continue;
      if (count == 1) {
        // Shrink past any exact root sitting inside, so intervals stay disjoint.
        Rat a = s.a, b = s.b;
        int va = s.va;
        bool shrunk = true;
        while (shrunk) {
          shrunk = false;
          for (const Rat& r : exact) {
            if (!(a < r && r < b)) continue;
            int vr = sign_variations(chain, r);  // w(r) != 0 after extraction
            if (va - vr == 1) {
              b = r;
            } else {
              a = r;
              va = vr;
            }
            shrunk = true;
            break;
          }
        }
        out.push_back({a, b});
        continue;
      }
      Rat mid = (s.a + s.b) / 2;
      int k = 1;
      while (w.eval(mid) == 0) {  // rational roots were removed; defensive
        mid = s.a + (s.b - s.a) * make_rat(k, 2 * k + 1);
        ++k;
      }
      int vm = sign_variations(chain, mid);
      stack.push_back({s.a, mid, s.va, vm});
      stack.push_back({mid, s.b, vm, s.vb});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
  return out;
}

namespace {

// Bisection refinement of an isolating interval with a sign change.
RatInterval refine_bisect(const IntPolynomial& w, RatInterval iv, const Rat& tol) {
  if (iv.exact()) return iv;
  int sa = sgn_rat(w.eval(iv.lo));
  int sb = sgn_rat(w.eval(iv.hi));
  if (sa == 0 || sb == 0 || sa == sb)
    throw InternalContradiction("refine_bisect: no sign change across the interval");
  while (iv.hi - iv.lo > tol) {
    Rat mid = iv.midpoint();
    int sm = sgn_rat(w.eval(mid));
    if (sm == 0) return {mid, mid};
    (sm == sa ? iv.lo : iv.hi) = mid;
  }
  return iv;
}

// --- winding-number root counting over a rectangle -------------------------

using RatPoly = std::vector<Rat>;  // index = degree

IntPolynomial rat_poly_to_primitive(const RatPoly& p) {
  std::size_t n = p.size();
  while (n > 0 && p[n - 1] == 0) --n;
  if (n == 0) return IntPolynomial();
  Int lcm = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int den = p[i].get_den(), g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat v = p[i] * Rat(lcm);
    c[i] = v.get_num();
  }
  return IntPolynomial(std::move(c)).primitive_part();
}

// Real and imaginary parts of p(s + i*c) as polynomials in s.
std::pair<IntPolynomial, IntPolynomial> restrict_horizontal(const IntPolynomial& p,
                                                            const Rat& c) {
  RatPoly U, V;
  for (int k = p.degree(); k >= 0; --k) {
    RatPoly nU(std::max(U.size(), V.size()) + 1, Rat(0));
    RatPoly nV(nU.size(), Rat(0));
    for (std::size_t i = 0; i < U.size(); ++i) nU[i + 1] += U[i];
    for (std::size_t i = 0; i < V.size(); ++i) nU[i] -= c * V[i];
    for (std::size_t i = 0; i < V.size(); ++i) nV[i + 1] += V[i];
    for (std::size_t i = 0; i < U.size(); ++i) nV[i] += c * U[i];
    nU[0] += Rat(p.coeff(k));
    U = std::move(nU);
    V = std::move(nV);
  }
  return {rat_poly_to_primitive(U), rat_poly_to_primitive(V)};
}

// Real and imaginary parts of p(c + i*s) as polynomials in s.
std::pair<IntPolynomial, IntPolynomial> restrict_vertical(const IntPolynomial& p, const Rat& c) {
  RatPoly U, V;
  for (int k = p.degree(); k >= 0; --k) {
    RatPoly nU(std::max(U.size(), V.size()) + 1, Rat(0));
    RatPoly nV(nU.size(), Rat(0));
    for (std::size_t i = 0; i < U.size(); ++i) nU[i] += c * U[i];
    for (std::size_t i = 0; i < V.size(); ++i) nU[i + 1] -= V[i];
    for (std::size_t i = 0; i < V.size(); ++i) nV[i] += c * V[i];
    for (std::size_t i = 0; i < U.size(); ++i) nV[i + 1] += U[i];
    nU[0] += Rat(p.coeff(k));
    U = std::move(nU);
    V = std::move(nV);
  }
  return {rat_poly_to_primitive(U), rat_poly_to_primitive(V)};
}

bool has_root_in_closed(const IntPolynomial& d0, const Rat& a, const Rat& b) {
  IntPolynomial d = square_free_part(d0).primitive_part();
  if (d.degree() < 1) return false;
  if (d.eval(a) == 0 || d.eval(b) == 0) return true;
  auto ch = sturm_chain(d, d.derivative());
  return count_real_roots(ch, a, b) > 0;
}

// Cauchy index of v/u over the oriented parameter range [a, b]; the caller
// guarantees u(a) != 0 and u(b) != 0 and no common root of (u, v) on [a, b].
int cauchy_index(const IntPolynomial& u, const IntPolynomial& v, const Rat& a, const Rat& b) {
  auto chain = sturm_chain(u, v);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// Winding count of p around the rectangle, counterclockwise. Throws
// BoundaryHit when a root of p (or an axis degeneracy) touches the boundary.
int rect_count(const IntPolynomial& p, const Rat& x0, const Rat& x1, const Rat& y0,
               const Rat& y1) {
  struct EdgeData {
    std::pair<IntPolynomial, IntPolynomial> uv;
    Rat a, b;
    int orient;
  };
  const EdgeData edges[4] = {
      {restrict_horizontal(p, y0), x0, x1, +1},  // bottom, left to right
      {restrict_vertical(p, x1), y0, y1, +1},    // right, upward
      {restrict_horizontal(p, y1), x0, x1, -1},  // top, right to left
      {restrict_vertical(p, x0), y0, y1, -1},    // left, downward
  };
  long total = 0;
  for (const auto& e : edges) {
    const IntPolynomial& u = e.uv.first;
    const IntPolynomial& v = e.uv.second;
    if (u.is_zero() && v.is_zero())
      throw InternalContradiction("rect_count: zero restriction of a nonzero polynomial");
    if (u.is_zero() || v.is_zero()) {
      // p stays on one axis along the whole edge: no winding contribution,
      // unless it passes through the origin.
      if (has_root_in_closed(u.is_zero() ? v : u, e.a, e.b)) throw BoundaryHit{};
      continue;
    }
    if (u.eval(e.a) == 0 || u.eval(e.b) == 0) throw BoundaryHit{};  // corner on the axis
    IntPolynomial d = poly_gcd(u, v);
    if (d.degree() >= 1 && has_root_in_closed(d, e.a, e.b)) throw BoundaryHit{};
    total += e.orient * cauchy_index(u, v, e.a, e.b);
  }
  if (total % 2 != 0) throw InternalContradiction("rect_count: odd Cauchy index sum");
  long w = -total / 2;
  if (w < 0) throw InternalContradiction("rect_count: negative winding number");
  return static_cast<int>(w);
}

struct Box {
  Rat x0, x1, y0, y1;
};

Rat min_dist2(const Box& b) {
  Rat dx = std::max(Rat(0), std::max(b.x0, Rat(-b.x1)));
  Rat dy = std::max(Rat(0), std::max(b.y0, Rat(-b.y1)));
  return dx * dx + dy * dy;
}

Rat max_dist2(const Box& b) {
  Rat mx = std::max(rat_abs(b.x0), rat_abs(b.x1));
  Rat my = std::max(rat_abs(b.y0), rat_abs(b.y1));
  return mx * mx + my * my;
}

int rect_count(const IntPolynomial& p, const Box& b) {
  return rect_count(p, b.x0, b.x1, b.y0, b.y1);
}

// Split fractions 1/2, 1/2 +- k/97: every candidate stays inside (1/4, 3/4).
Rat split_fraction(int k) {
  if (k == 0) return make_rat(1, 2);
  int off = (k + 1) / 2;
  return make_rat(1, 2) + make_rat((k % 2 ? off : -off), 97);
}

// Splits a box with count >= 2 into two children with a clean splitting line.
std::pair<std::pair<Box, int>, std::pair<Box, int>> split_box(const IntPolynomial& q,
                                                              const Box& box, int count) {
  bool vertical = (box.x1 - box.x0) >= (box.y1 - box.y0);
  for (int k = 0; k <= 40; ++k) {
    Rat f = split_fraction(k);
    Box b1 = box, b2 = box;
    if (vertical) {
      Rat m = box.x0 + (box.x1 - box.x0) * f;
      b1.x1 = m;
      b2.x0 = m;
    } else {
      Rat m = box.y0 + (box.y1 - box.y0) * f;
      b1.y1 = m;
      b2.y0 = m;
    }
    try {
      int c1 = rect_count(q, b1);
      int c2 = rect_count(q, b2);
      if (c1 + c2 != count)
        throw InternalContradiction("split_box: child counts do not sum to parent count");
      return {{b1, c1}, {b2, c2}};
    } catch (const BoundaryHit&) {
      continue;
    }
  }
  throw InconclusiveError("cannot place a clean splitting line after 40 attempts");
}

// One isolating box per complex-conjugate pair (upper half-plane members).
std::vector<Box> isolate_complex_boxes(const IntPolynomial& q, int expected_pairs) {
  std::vector<Box> done;
  if (expected_pairs == 0) return done;
  Rat B = cauchy_bound(q);
  Box band{-B - make_rat(1, 7), B + make_rat(1, 9), make_rat(1, 8), B + make_rat(1, 11)};
  int found = -1;
  for (int attempt = 0; attempt < 300; ++attempt) {
    try {
      found = rect_count(q, band);
      if (found == expected_pairs) break;
      if (found > expected_pairs)
        throw InternalContradiction("band contains more roots than conjugate pairs");
      band.y0 = band.y0 / 16;
    } catch (const BoundaryHit&) {
      band.y0 = band.y0 * make_rat(13, 14);
      band.x0 = band.x0 - make_rat(1, 17);
      band.x1 = band.x1 + make_rat(1, 19);
      band.y1 = band.y1 + make_rat(1, 23);
    }
  }
  if (found != expected_pairs)
    throw InconclusiveError("cannot bracket all complex roots in an upper-half band");

  std::deque<std::pair<Box, int>> queue{{band, found}};
  int splits = 0;
  while (!queue.empty()) {
    auto [box, count] = queue.front();
    queue.pop_front();
    if (count == 0) continue;
    if (count == 1) {
      done.push_back(box);
      continue;
    }
    if (++splits > 600) throw InconclusiveError("complex subdivision depth exceeded");
    auto [c1, c2] = split_box(q, box, count);
    queue.push_back(c1);
    queue.push_back(c2);
  }
  return done;
}

enum class DiskVerdict { Outside, Inside };

// Refines a count-1 box until it is certified outside the radius-sqrt(hi2)
// disk, or certified inside radius sqrt(lo2) (a dominance violation).
DiskVerdict refine_box_vs_disk(const IntPolynomial& q, Box& box, const Rat& hi2,
                               const Rat& lo2) {
  for (int iter = 0; iter < 400; ++iter) {
    if (min_dist2(box) > hi2) return DiskVerdict::Outside;
    if (max_dist2(box) < lo2) return DiskVerdict::Inside;
    auto [c1, c2] = split_box(q, box, 1);
    box = c1.second == 1 ? c1.first : c2.first;
  }
  throw InconclusiveError("cannot separate a complex root from the disk boundary");
}

const IntPolynomial& cyclo_i() {
  static const IntPolynomial p{1, 0, 1};
  return p;
}
const IntPolynomial& cyclo_3() {
  static const IntPolynomial p{1, 1, 1};
  return p;
}
const IntPolynomial& cyclo_6() {
  static const IntPolynomial p{1, -1, 1};
  return p;
}

}  // namespace

int count_roots_in_rect(const IntPolynomial& p, const Rat& x0, const Rat& x1, const Rat& y0,
                        const Rat& y1) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  if (!(x0 < x1 && y0 < y1)) throw DomainError("empty rectangle");
  try {
    return rect_count(p, x0, x1, y0, y1);
  } catch (const BoundaryHit&) {
    throw DomainError("a root lies on (or a degeneracy touches) the rectangle boundary");
  }
}

PerronResult perron_certify(const IntPolynomial& g, const RatInterval& r0_enclosure) {
  if (g.degree() < 1) throw DomainError("perron_certify needs a nonconstant polynomial");
  PerronResult res;
  const Rat hi = r0_enclosure.hi;
  const Rat hi2 = hi * hi;
  const Rat lo2 = r0_enclosure.lo * r0_enclosure.lo;

  // Multiplicity of the dominant root.
  IntPolynomial mult = poly_gcd(g, g.derivative());
  if (mult.degree() >= 1) {
    bool dominant_multiple;
    IntPolynomial ms = square_free_part(mult).primitive_part();
    if (r0_enclosure.exact()) {
      dominant_multiple = ms.eval(r0_enclosure.lo) == 0;
    } else if (ms.eval(r0_enclosure.lo) == 0 || ms.eval(r0_enclosure.hi) == 0) {
      dominant_multiple = true;
    } else {
      auto ch = sturm_chain(ms, ms.derivative());
      dominant_multiple = count_real_roots(ch, r0_enclosure.lo, r0_enclosure.hi) > 0;
    }
    if (dominant_multiple) {
      res.simple = false;
      res.perron = false;
      res.modulus_gap = 0;
      return res;
    }
  }
  res.simple = true;

  std::vector<Rat> outside_mod2;  // certified squared-modulus lower bounds
  bool violated = false;

  auto classify_exact_mod2 = [&](const Rat& m2) {
    if (m2 > hi2) {
      outside_mod2.push_back(m2);
    } else if (m2 < lo2) {
      violated = true;
    } else {
      throw InconclusiveError("another root's modulus is not separated from the enclosure");
    }
  };

  // Known cyclotomic factors contribute roots of modulus exactly 1.
  IntPolynomial w = square_free_part(g).primitive_part();
  for (const IntPolynomial* c : {&cyclo_i(), &cyclo_3(), &cyclo_6()}) {
    if (auto q = w.divide_exact(*c)) {
      w = *q;
      classify_exact_mod2(Rat(1));
    }
  }

  // Exact rational roots.
  IntPolynomial q = w;
  std::vector<Rat> rational_roots = extract_rational_roots(q);
  int dominant_seen = 0;
  for (const Rat& r : rational_roots) {
    if (r > 0 && r0_enclosure.contains(r)) {
      ++dominant_seen;
      continue;
    }
    classify_exact_mod2(r * r);
  }

  // Remaining (irrational) real roots.
  if (q.degree() >= 1) {
    Rat B = cauchy_bound(q);
    for (RatInterval iv : sturm_isolate(q, -B - 1, B + 1)) {
      // Settle whether this interval holds the dominant root.
      bool overlaps = iv.lo <= r0_enclosure.hi && r0_enclosure.lo <= iv.hi;
      int guard = 0;
      while (overlaps && !(r0_enclosure.lo <= iv.lo && iv.hi <= r0_enclosure.hi)) {
        if (++guard > 400)
          throw InconclusiveError("cannot separate a real root from the dominant enclosure");
        iv = refine_bisect(q, iv, iv.width() / 2);
        overlaps = iv.lo <= r0_enclosure.hi && r0_enclosure.lo <= iv.hi;
      }
      if (overlaps) {
        ++dominant_seen;
        continue;
      }
      guard = 0;
      for (;;) {
        Rat mn = std::max(Rat(0), std::max(iv.lo, Rat(-iv.hi)));
        Rat mx = std::max(rat_abs(iv.lo), rat_abs(iv.hi));
        if (mn * mn > hi2) {
          outside_mod2.push_back(mn * mn);
          break;
        }
        if (mx * mx < lo2) {
          violated = true;
          break;
        }
        if (++guard > 400)
          throw InconclusiveError("cannot separate a real root from the disk boundary");
        iv = refine_bisect(q, iv, iv.width() / 2);
      }
    }
  }

  if (dominant_seen != 1)
    throw InternalContradiction("expected exactly one root inside the dominant enclosure, saw " +
                                std::to_string(dominant_seen));

  // Complex conjugate pairs.
  if (q.degree() >= 2) {
    int reals = 0;
    {
      Rat B = cauchy_bound(q);
      reals = static_cast<int>(sturm_isolate(q, -B - 1, B + 1).size());
    }
    int pairs = (q.degree() - reals) / 2;
    if (q.degree() - reals != 2 * pairs)
      throw InternalContradiction("real/complex root count mismatch");
    for (Box box : isolate_complex_boxes(q, pairs)) {
      if (refine_box_vs_disk(q, box, hi2, lo2) == DiskVerdict::Inside) {
        violated = true;
      } else {
        outside_mod2.push_back(min_dist2(box));
      }
    }
  }

  if (violated) {
    res.perron = false;
    res.modulus_gap = 0;
    return res;
  }

  res.perron = true;
  if (outside_mod2.empty()) {
    // No other roots at all (linear g): any gap is valid; report 1.
    res.modulus_gap = 1;
    return res;
  }
  Rat m2 = *std::min_element(outside_mod2.begin(), outside_mod2.end());
  Rat delta = (m2 - hi2) / (2 * hi + 2);
  while ((hi + delta) * (hi + delta) > m2) delta /= 2;
  res.modulus_gap = delta;
  return res;
}

IntPolynomial tau_polynomial(const InvariantVector& iv) {
  if (iv.c9 % 2 != 0 || iv.c10 % 2 != 0)
    throw DomainError("tau_polynomial needs even c9 and c10");
  IntPolynomial g = g_polynomial(iv);
  std::vector<Int> c(8);
  for (int k = 0; k <= 7; ++k) {
    Int v = -g.coeff(7 - k);
    if (v % 2 != 0) throw InternalContradiction("odd coefficient in g despite even c9, c10");
    c[k] = v / 2;
  }
  return IntPolynomial(std::move(c));
}

RootCertificate growth_rate(const InvariantVector& iv, const Rat& tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  IntPolynomial g = g_polynomial(iv);
  if (g.eval(Rat(0)) != -2) throw InternalContradiction("g(0) != -2");
  if (g_at_half(iv) <= 0) throw InternalContradiction("g(1/2) <= 0");

  auto intervals = sturm_isolate(g, Rat(0), make_rat(1, 2));
  if (intervals.size() != 1)
    throw InternalContradiction("expected a unique root in (0,1/2), found " +
                                std::to_string(intervals.size()));
  RatInterval r0 = intervals[0];
  if (!r0.exact()) {
    IntPolynomial w = square_free_part(g).primitive_part();
    r0 = refine_bisect(w, r0, tol);
  }

  RootCertificate cert;
  cert.r0 = r0;
  cert.tau = r0.exact() ? RatInterval{Rat(1) / r0.lo, Rat(1) / r0.lo}
                        : RatInterval{Rat(1) / r0.hi, Rat(1) / r0.lo};
  PerronResult pr = perron_certify(g, r0);
  cert.simple = pr.simple;
  cert.perron = pr.perron;
  cert.modulus_gap = pr.modulus_gap;
  cert.tau_min_poly_candidate = tau_polynomial(iv);
  return cert;
}

RootCertificate growth_rate(const PolyhedronCombinatorics& P, const Rat& tol) {
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw DomainError("polyhedron '" + P.name + "' does not validate");
  return growth_rate(*rep.invariants, tol);
}

std::string RootCertificate::str() const {
  std::ostringstream out;
  if (tau.exact()) {
    out << "tau = " << rat_str(tau.lo) << " (exact)\n";
  } else {
    out << "tau in [" << rat_str(tau.lo) << ", " << rat_str(tau.hi) << "]\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", rat_to_double(tau.midpoint()));
    out << "tau ~= " << buf << " (err <= " << rat_to_double(tau.width()) << ")\n";
  }
  out << "simple: " << (simple ? "true" : "false") << "\n";
  if (perron)
    out << "perron: true (gap >= " << rat_str(modulus_gap) << ")\n";
  else
    out << "perron: false\n";
  out << "tau integer polynomial: " << tau_min_poly_candidate.str() << "\n";
  return out.str();
}

bool SignCheckReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::string SignCheckReport::str() const {
  return render_check_list(checks) + "  note: sampled spot-check, not a proof\n";
}

SignCheckReport growth_sign_checks(const PolyhedronCombinatorics& P, int grid) {
  if (grid < 1) throw DomainError("grid must be positive");
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw DomainError("polyhedron '" + P.name + "' does not validate");
  const InvariantVector& iv = *rep.invariants;
  IntPolynomial g = g_polynomial(iv);
  IntPolynomial dg = g.derivative();

  SignCheckReport out;
  bool neg_ok = true;
  std::string neg_detail;
  for (int k = 1; k <= grid + 1; ++k) {
    Rat t = -make_rat(k, 2 * (grid + 2));
    if (g.eval(t) >= 0) {
      neg_ok = false;
      neg_detail = "g(" + rat_str(t) + ") >= 0";
      break;
    }
  }
  out.checks.push_back({"g < 0 on (-1/2,0) sampled",
                        neg_ok ? CheckStatus::Pass : CheckStatus::Fail, neg_detail});

  if (iv.right_angled()) {
    out.checks.push_back({"g' > 0 on (0,1/2) sampled", CheckStatus::Skip,
                          "right-angled: the derivative may vanish on (0,1/2)"});
  } else {
    bool der_ok = true;
    std::string der_detail;
    for (int k = 1; k <= grid + 1; ++k) {
      Rat t = make_rat(k, 2 * (grid + 2));
      if (dg.eval(t) <= 0) {
        der_ok = false;
        der_detail = "g'(" + rat_str(t) + ") <= 0";
        break;
      }
    }
    out.checks.push_back({"g' > 0 on (0,1/2) sampled",
                          der_ok ? CheckStatus::Pass : CheckStatus::Fail, der_detail});
  }

  bool zero_ok = g.eval(Rat(0)) == -2;
  out.checks.push_back({"g(0) = -2 exactly", zero_ok ? CheckStatus::Pass : CheckStatus::Fail,
                        zero_ok ? "" : "g(0) = " + rat_str(g.eval(Rat(0)))});
  Rat gh = g_at_half(iv);
  out.checks.push_back({"g(1/2) > 0 exactly (= (55c+50f+10c9+4c10-415)/64)",
                        gh > 0 ? CheckStatus::Pass : CheckStatus::Fail,
                        "g(1/2) = " + rat_str(gh)});
  return out;
}

long long right_angled_rate(const PolyhedronCombinatorics& P) {
  ValidationReport rep = validate(P);
  if (!rep.ok()) throw DomainError("polyhedron '" + P.name + "' does not validate");
  if (!P.right_angled()) throw DomainError("polyhedron '" + P.name + "' is not right-angled");
  const long long f = P.face_count;
  IntPolynomial expected = IntPolynomial::constant(2) * IntPolynomial{1, 0, 1} *
                           IntPolynomial{1, 0, 1, 0, 1} *
                           IntPolynomial(std::vector<Int>{Int(-1), to_int(f - 3)});
  if (expected != g_polynomial(*rep.invariants))
    throw InternalContradiction("right-angled factorization mismatch for '" + P.name + "'");
  return f - 3;
}

}  // namespace icox
