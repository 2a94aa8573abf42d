#include "icox/oracle.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_set>

namespace icox {

CoxeterMatrix coxeter_matrix(const PolyhedronCombinatorics& P) {
  CoxeterMatrix M;
  M.n = P.face_count;
  M.m.assign(static_cast<std::size_t>(M.n) * M.n, CoxeterMatrix::kInfinity);
  for (int s = 0; s < M.n; ++s) M.m[s * M.n + s] = 1;
  for (const auto& e : P.edges) {
    M.m[e.a * M.n + e.b] = e.m;
    M.m[e.b * M.n + e.a] = e.m;
  }
  return M;
}

QuadraticFieldNumber QuadraticFieldNumber::operator+(const QuadraticFieldNumber& o) const {
  return QuadraticFieldNumber(a + o.a, b + o.b, c + o.c, d + o.d);
}

QuadraticFieldNumber QuadraticFieldNumber::operator-(const QuadraticFieldNumber& o) const {
  return QuadraticFieldNumber(a - o.a, b - o.b, c - o.c, d - o.d);
}

QuadraticFieldNumber QuadraticFieldNumber::operator*(const QuadraticFieldNumber& o) const {
  // (a1 + b1 r2 + c1 r3 + d1 r6)(a2 + b2 r2 + c2 r3 + d2 r6) with r2^2 = 2,
  // r3^2 = 3, r2 r3 = r6, r2 r6 = 2 r3, r3 r6 = 3 r2, r6^2 = 6.
  return QuadraticFieldNumber(a * o.a + 2 * (b * o.b) + 3 * (c * o.c) + 6 * (d * o.d),
                              a * o.b + b * o.a + 3 * (c * o.d + d * o.c),
                              a * o.c + c * o.a + 2 * (b * o.d + d * o.b),
                              a * o.d + d * o.a + b * o.c + c * o.b);
}

std::string QuadraticFieldNumber::str() const {
  std::ostringstream out;
  out << rat_str(a);
  if (b != 0) out << (b > 0 ? "+" : "") << rat_str(b) << "*sqrt(2)";
  if (c != 0) out << (c > 0 ? "+" : "") << rat_str(c) << "*sqrt(3)";
  if (d != 0) out << (d > 0 ? "+" : "") << rat_str(d) << "*sqrt(6)";
  return out.str();
}

QuadraticFieldNumber cos_pi_over(int m) {
  switch (m) {
    case CoxeterMatrix::kInfinity:
      return QuadraticFieldNumber(Rat(1));
    case 1:
      return QuadraticFieldNumber(Rat(-1));
    case 2:
      return QuadraticFieldNumber(Rat(0));
    case 3:
      return QuadraticFieldNumber(make_rat(1, 2));
    case 4:
      return QuadraticFieldNumber(Rat(0), make_rat(1, 2));
    case 6:
      return QuadraticFieldNumber(Rat(0), Rat(0), make_rat(1, 2));
    default:
      throw DomainError("cos(pi/m) not representable for m = " + std::to_string(m));
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix M;
  M.n = n;
  M.a.assign(static_cast<std::size_t>(n) * n, QuadraticFieldNumber());
  for (int i = 0; i < n; ++i) M.at(i, i) = QuadraticFieldNumber(Rat(1));
  return M;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  QMatrix out;
  out.n = n;
  out.a.assign(a.size(), QuadraticFieldNumber());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const QuadraticFieldNumber& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) = out.at(i, j) + x * o.at(k, j);
    }
  return out;
}

std::vector<QMatrix> canonical_representation(const CoxeterMatrix& M) {
  std::vector<QMatrix> gens;
  gens.reserve(M.n);
  const QuadraticFieldNumber two(Rat(2));
  for (int s = 0; s < M.n; ++s) {
    // sigma_s(e_t) = e_t - 2 B(e_s,e_t) e_s with B(e_s,e_t) = -cos(pi/m(s,t)),
    // so row s of the matrix is delta_st + 2 cos(pi/m(s,t)).
    QMatrix g = QMatrix::identity(M.n);
    for (int t = 0; t < M.n; ++t)
      g.at(s, t) = g.at(s, t) + two * cos_pi_over(M.order(s, t));
    gens.push_back(std::move(g));
  }
  return gens;
}

namespace {

// BFS fast path: the generator matrices have entries in Z[sqrt2, sqrt3], so
// elements carry four int64 components per entry. Overflow-checked; the
// catalog groups stay far below the int64 range at the default depth.
struct Q4 {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Q4&) const = default;
};

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw LimitError("bfs_growth: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw LimitError("bfs_growth: coefficient overflow");
  return r;
}

Q4 q4_add(const Q4& x, const Q4& y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(x.c, y.c),
          checked_add(x.d, y.d)};
}

Q4 q4_scale(const Q4& x, std::int64_t k) {
  return {checked_mul(x.a, k), checked_mul(x.b, k), checked_mul(x.c, k), checked_mul(x.d, k)};
}

Q4 q4_mul_sqrt2(const Q4& x) { return {checked_mul(x.b, 2), x.a, checked_mul(x.d, 2), x.c}; }

Q4 q4_mul_sqrt3(const Q4& x) { return {checked_mul(x.c, 3), checked_mul(x.d, 3), x.a, x.b}; }

struct CompactMatrix {
  std::vector<Q4> a;  // row-major n*n
  bool operator==(const CompactMatrix&) const = default;
};

struct CompactMatrixHash {
  std::size_t operator()(const CompactMatrix& m) const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto mix = [&h](std::int64_t v) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    };
    for (const Q4& q : m.a) {
      mix(q.a);
      mix(q.b);
      mix(q.c);
      mix(q.d);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

GrowthSample bfs_growth(const CoxeterMatrix& M, int depth, long long element_cap) {
  if (depth < 0) throw DomainError("depth must be nonnegative");
  if (M.n < 1) throw DomainError("empty Coxeter matrix");
  const int n = M.n;

  // Column update per generator: applying sigma_s on the right maps column t
  // to col_t + 2cos(pi/m(s,t)) col_s, and col_s to -col_s.
  // 2cos(pi/m): m=2 -> 0, 3 -> 1, 4 -> sqrt2, 6 -> sqrt3, infinity -> 2.
  enum class Action { Zero, One, Sqrt2, Sqrt3, Two };
  std::vector<Action> action(static_cast<std::size_t>(n) * n, Action::Zero);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      switch (M.order(s, t)) {
        case 2: action[s * n + t] = Action::Zero; break;
        case 3: action[s * n + t] = Action::One; break;
        case 4: action[s * n + t] = Action::Sqrt2; break;
        case 6: action[s * n + t] = Action::Sqrt3; break;
        case CoxeterMatrix::kInfinity: action[s * n + t] = Action::Two; break;
        default:
          throw DomainError("unsupported Coxeter matrix entry m = " +
                            std::to_string(M.order(s, t)));
      }
    }

  auto apply_generator = [&](const CompactMatrix& m, int s) {
    CompactMatrix out = m;
    std::vector<Q4> col_s(n);
    for (int r = 0; r < n; ++r) col_s[r] = m.a[r * n + s];
    for (int t = 0; t < n; ++t) {
      if (t == s) {
        for (int r = 0; r < n; ++r) out.a[r * n + t] = q4_scale(col_s[r], -1);
        continue;
      }
      switch (action[s * n + t]) {
        case Action::Zero:
          break;
        case Action::One:
          for (int r = 0; r < n; ++r) out.a[r * n + t] = q4_add(out.a[r * n + t], col_s[r]);
          break;
        case Action::Sqrt2:
          for (int r = 0; r < n; ++r)
            out.a[r * n + t] = q4_add(out.a[r * n + t], q4_mul_sqrt2(col_s[r]));
          break;
        case Action::Sqrt3:
          for (int r = 0; r < n; ++r)
            out.a[r * n + t] = q4_add(out.a[r * n + t], q4_mul_sqrt3(col_s[r]));
          break;
        case Action::Two:
          for (int r = 0; r < n; ++r)
            out.a[r * n + t] = q4_add(out.a[r * n + t], q4_scale(col_s[r], 2));
          break;
      }
    }
    return out;
  };

  CompactMatrix id;
  id.a.assign(static_cast<std::size_t>(n) * n, Q4{});
  for (int i = 0; i < n; ++i) id.a[i * n + i] = Q4{1, 0, 0, 0};

  std::unordered_set<CompactMatrix, CompactMatrixHash> visited{id};
  std::vector<CompactMatrix> frontier{id};
  GrowthSample sample;
  sample.counts.push_back(Int(1));
  sample.depth = 0;
  long long total = 1;

  for (int level = 1; level <= depth; ++level) {
    std::vector<CompactMatrix> next;
    for (const CompactMatrix& m : frontier)
      for (int s = 0; s < n; ++s) {
        CompactMatrix cand = apply_generator(m, s);
        if (visited.insert(cand).second) {
          ++total;
          if (total > element_cap)
            throw LimitError("bfs_growth: element cap " + std::to_string(element_cap) +
                             " exceeded; completed depth " + std::to_string(level - 1));
          next.push_back(std::move(cand));
        }
      }
    sample.counts.push_back(to_int(static_cast<long long>(next.size())));
    sample.depth = level;
    frontier = std::move(next);
  }
  return sample;
}

}  // namespace icox
