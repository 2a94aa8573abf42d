#include "icox/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace icox {

bool is_valid_angle_label(int m) { return m == 2 || m == 3 || m == 4 || m == 6; }

std::string cusp_type_name(CuspType t) {
  switch (t) {
    case CuspType::TypeI: return "I";
    case CuspType::TypeII: return "II";
    case CuspType::TypeIII: return "III";
    case CuspType::TypeIV: return "IV";
  }
  return "?";
}

std::optional<int> PolyhedronCombinatorics::label(int x, int y) const {
  if (x > y) std::swap(x, y);
  for (const auto& e : edges)
    if (e.a == x && e.b == y) return e.m;
  return std::nullopt;
}

std::vector<int> PolyhedronCombinatorics::neighbors(int face) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.a == face) out.push_back(e.b);
    if (e.b == face) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PolyhedronCombinatorics::right_angled() const {
  return std::all_of(edges.begin(), edges.end(), [](const EdgeRecord& e) { return e.m == 2; });
}

std::vector<int> PolyhedronCombinatorics::cusps_of_face(int face) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cusps.size(); ++i)
    if (std::find(cusps[i].begin(), cusps[i].end(), face) != cusps[i].end())
      out.push_back(static_cast<int>(i));
  return out;
}

namespace {

std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
  const int k = static_cast<int>(cyc.size());
  auto mn = std::min_element(cyc.begin(), cyc.end());
  int p = static_cast<int>(mn - cyc.begin());
  std::vector<int> fwd(k), bwd(k);
  for (int i = 0; i < k; ++i) {
    fwd[i] = cyc[(p + i) % k];
    bwd[i] = cyc[(p - i % k + k) % k];
  }
  return std::min(fwd, bwd);
}

}  // namespace

PolyhedronCombinatorics make_polyhedron(std::string name, int face_count,
                                        std::vector<EdgeRecord> edges,
                                        std::vector<std::vector<int>> cusps) {
  if (face_count < 4) throw DomainError("face count must be at least 4");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a == e.b) throw DomainError("edge joins a face to itself");
    if (e.a < 0 || e.b >= face_count) throw DomainError("edge face index out of range");
    if (!is_valid_angle_label(e.m))
      throw DomainError("angle label " + std::to_string(e.m) + " not in {2,3,4,6}");
    if (!seen.insert({e.a, e.b}).second)
      throw DomainError("duplicate edge for face pair (" + std::to_string(e.a) + "," +
                        std::to_string(e.b) + ")");
  }
  std::sort(edges.begin(), edges.end());
  for (auto& cusp : cusps) {
    if (cusp.size() != 3 && cusp.size() != 4)
      throw DomainError("cusp with " + std::to_string(cusp.size()) + " faces (expected 3 or 4)");
    std::set<int> distinct(cusp.begin(), cusp.end());
    if (distinct.size() != cusp.size()) throw DomainError("cusp repeats a face");
    for (int f : cusp)
      if (f < 0 || f >= face_count) throw DomainError("cusp face index out of range");
    cusp = canonical_cycle(cusp);
  }
  std::sort(cusps.begin(), cusps.end());
  PolyhedronCombinatorics P;
  P.name = std::move(name);
  P.face_count = face_count;
  P.edges = std::move(edges);
  P.cusps = std::move(cusps);
  return P;
}

PolyhedronCombinatorics parse_icp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::string name;
  bool have_name = false;
  int face_count = -1;
  std::vector<EdgeRecord> edges;
  std::vector<std::vector<int>> cusps;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;  // blank

    if (kw == "name") {
      if (have_name) throw ParseError("duplicate 'name' directive", lineno);
      if (!(ls >> name)) throw ParseError("expected 'name <identifier>'", lineno);
      have_name = true;
    } else if (kw == "faces") {
      if (!have_name) throw ParseError("'faces' must follow 'name'", lineno);
      if (face_count >= 0) throw ParseError("duplicate 'faces' directive", lineno);
      if (!(ls >> face_count)) throw ParseError("expected 'faces <count>'", lineno);
      if (face_count < 4) throw ParseError("face count must be at least 4", lineno);
    } else if (kw == "edge") {
      if (face_count < 0) throw ParseError("'edge' before 'name'/'faces'", lineno);
      int i, j, m;
      if (!(ls >> i >> j >> m)) throw ParseError("expected 'edge <i> <j> <m>'", lineno);
      if (!(i >= 0 && i < j && j < face_count))
        throw ParseError("edge needs 0 <= i < j < faces", lineno);
      if (!is_valid_angle_label(m))
        throw ParseError("label " + std::to_string(m) + " not in {2,3,4,6}", lineno);
      if (!seen.insert({i, j}).second)
        throw ParseError("duplicate edge for face pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")", lineno);
      edges.push_back({i, j, m});
    } else if (kw == "cusp") {
      if (face_count < 0) throw ParseError("'cusp' before 'name'/'faces'", lineno);
      std::vector<int> cusp;
      int f;
      while (ls >> f) cusp.push_back(f);
      ls.clear();  // recover from the failed read so trailing tokens surface
      if (cusp.size() != 3 && cusp.size() != 4)
        throw ParseError("cusp with " + std::to_string(cusp.size()) + " faces (expected 3 or 4)",
                         lineno);
      std::set<int> distinct(cusp.begin(), cusp.end());
      if (distinct.size() != cusp.size()) throw ParseError("cusp repeats a face", lineno);
      for (int c : cusp)
        if (c < 0 || c >= face_count) throw ParseError("cusp face index out of range", lineno);
      cusps.push_back(std::move(cusp));
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno);
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing tokens after directive", lineno);
  }
  if (!have_name) throw ParseError("missing 'name' directive");
  if (face_count < 0) throw ParseError("missing 'faces' directive");
  return make_polyhedron(name, face_count, std::move(edges), std::move(cusps));
}

PolyhedronCombinatorics parse_icp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_icp(buf.str());
}

std::string serialize_icp(const PolyhedronCombinatorics& P) {
  std::ostringstream out;
  out << "name " << P.name << "\n";
  out << "faces " << P.face_count << "\n";
  for (const auto& e : P.edges) out << "edge " << e.a << " " << e.b << " " << e.m << "\n";
  for (const auto& cusp : P.cusps) {
    out << "cusp";
    for (int f : cusp) out << " " << f;
    out << "\n";
  }
  return out.str();
}

namespace {

// Labels around a cusp, in cycle order; nullopt when a consecutive pair is
// not an edge.
std::optional<std::vector<int>> cusp_labels(const std::vector<int>& cusp,
                                            const PolyhedronCombinatorics& P) {
  const int k = static_cast<int>(cusp.size());
  std::vector<int> labels(k);
  for (int i = 0; i < k; ++i) {
    auto m = P.label(cusp[i], cusp[(i + 1) % k]);
    if (!m) return std::nullopt;
    labels[i] = *m;
  }
  return labels;
}

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

CuspType classify_cusp(const std::vector<int>& cusp, const PolyhedronCombinatorics& P) {
  auto labels = cusp_labels(cusp, P);
  if (!labels)
    throw DomainError("cusp (" + join_ints(cusp, ",") + ") has a consecutive pair with no edge");
  std::vector<int> sorted = *labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted == std::vector<int>{2, 2, 2, 2}) return CuspType::TypeI;
  if (sorted == std::vector<int>{3, 3, 3}) return CuspType::TypeII;
  if (sorted == std::vector<int>{2, 4, 4}) return CuspType::TypeIII;
  if (sorted == std::vector<int>{2, 3, 6}) return CuspType::TypeIV;
  // Report the link angle defect: sum of (1 - 1/m) in units of pi/12.
  int twelfths = 0;
  for (int m : sorted) twelfths += 12 - 12 / m;
  throw DomainError("angle-sum violation at cusp (" + join_ints(cusp, ",") + "): labels {" +
                    join_ints(sorted, ",") + "} give link angle sum " + std::to_string(twelfths) +
                    "/12 pi != 2 pi");
}

InvariantVector compute_invariants(const PolyhedronCombinatorics& P) {
  InvariantVector iv;
  iv.f = P.face_count;
  iv.c = static_cast<long long>(P.cusps.size());
  iv.e = static_cast<long long>(P.edges.size());
  for (const auto& e : P.edges) {
    switch (e.m) {
      case 2: ++iv.e2; break;
      case 3: ++iv.e3; break;
      case 4: ++iv.e4; break;
      case 6: ++iv.e6; break;
    }
  }
  for (const auto& cusp : P.cusps) {
    switch (classify_cusp(cusp, P)) {
      case CuspType::TypeI: ++iv.c8; break;
      case CuspType::TypeII: ++iv.c9; break;
      case CuspType::TypeIII: ++iv.c10; break;
      case CuspType::TypeIV: ++iv.c11; break;
    }
  }
  return iv;
}

std::string InvariantVector::str() const {
  std::ostringstream out;
  out << "f=" << f << " c=" << c << " e=" << e << " e2=" << e2 << " e3=" << e3 << " e4=" << e4
      << " e6=" << e6 << " c8=" << c8 << " c9=" << c9 << " c10=" << c10 << " c11=" << c11;
  return out.str();
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

}  // namespace

std::string render_check_list(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

std::string ValidationReport::str() const {
  std::ostringstream out;
  if (invariants) out << "  " << invariants->str() << "\n";
  out << render_check_list(checks);
  out << (ok() ? "  verdict: valid" : "  verdict: INVALID") << "\n";
  return out.str();
}

ValidationReport validate(const PolyhedronCombinatorics& P) {
  ValidationReport rep;
  auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass ? CheckStatus::Pass : CheckStatus::Fail, detail});
  };
  auto skip = [&rep](const std::string& name, const std::string& detail) {
    rep.checks.push_back({name, CheckStatus::Skip, detail});
  };

  // Structural coverage.
  bool pairs_ok = true;
  std::string pairs_detail;
  std::map<std::pair<int, int>, int> edge_use;
  for (const auto& cusp : P.cusps) {
    const int k = static_cast<int>(cusp.size());
    for (int i = 0; i < k; ++i) {
      int x = cusp[i], y = cusp[(i + 1) % k];
      if (x > y) std::swap(x, y);
      if (!P.label(x, y)) {
        pairs_ok = false;
        if (pairs_detail.empty())
          pairs_detail = "cusp pair (" + std::to_string(x) + "," + std::to_string(y) +
                         ") is not an edge";
      } else {
        ++edge_use[{x, y}];
      }
    }
  }
  add("cusp-pairs-are-edges", pairs_ok, pairs_detail);

  bool coverage_ok = true;
  std::string coverage_detail;
  for (const auto& e : P.edges) {
    int uses = edge_use.count({e.a, e.b}) ? edge_use[{e.a, e.b}] : 0;
    if (uses != 2) {
      coverage_ok = false;
      if (coverage_detail.empty())
        coverage_detail = "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                          ") lies in " + std::to_string(uses) + " cusps (expected 2)";
    }
  }
  add("edge-in-two-cusps", coverage_ok, coverage_detail);

  bool incidence_ok = true;
  std::string incidence_detail;
  for (int f = 0; f < P.face_count; ++f) {
    auto cf = P.cusps_of_face(f);
    if (cf.size() < 3) {
      incidence_ok = false;
      if (incidence_detail.empty())
        incidence_detail = "face " + std::to_string(f) + " lies in only " +
                           std::to_string(cf.size()) + " cusps";
    }
  }
  add("face-in-three-cusps", incidence_ok, incidence_detail);
  add("cusp-count", P.cusps.size() >= 4,
      P.cusps.size() >= 4 ? "" : "only " + std::to_string(P.cusps.size()) + " cusps");

  // Cusp classification; tallies are only meaningful when it succeeds.
  InvariantVector iv;
  iv.f = P.face_count;
  iv.c = static_cast<long long>(P.cusps.size());
  iv.e = static_cast<long long>(P.edges.size());
  for (const auto& e : P.edges) {
    switch (e.m) {
      case 2: ++iv.e2; break;
      case 3: ++iv.e3; break;
      case 4: ++iv.e4; break;
      case 6: ++iv.e6; break;
    }
  }
  bool classified = true;
  std::string classify_detail;
  for (const auto& cusp : P.cusps) {
    if (!cusp_labels(cusp, P)) {
      classified = false;
      if (classify_detail.empty())
        classify_detail = "cusp (" + join_ints(cusp, ",") + ") has a non-edge pair";
      continue;
    }
    try {
      switch (classify_cusp(cusp, P)) {
        case CuspType::TypeI: ++iv.c8; break;
        case CuspType::TypeII: ++iv.c9; break;
        case CuspType::TypeIII: ++iv.c10; break;
        case CuspType::TypeIV: ++iv.c11; break;
      }
    } catch (const DomainError& err) {
      classified = false;
      if (classify_detail.empty()) classify_detail = err.what();
    }
  }
  add("cusp-classification", classified, classify_detail);
  if (!classified) {
    rep.invariants = std::nullopt;
    return rep;
  }
  rep.invariants = iv;

  auto eq = [&](const std::string& name, long long lhs, long long rhs) {
    add(name, lhs == rhs,
        lhs == rhs ? "" : std::to_string(lhs) + " != " + std::to_string(rhs));
  };
  eq("euler identity c-e+f=2", iv.c - iv.e + iv.f, 2);
  eq("identity 4c8+3c9+3c10+3c11=2e", 4 * iv.c8 + 3 * iv.c9 + 3 * iv.c10 + 3 * iv.c11,
     2 * iv.e);
  eq("identity 2e2=4c8+c10+c11", 2 * iv.e2, 4 * iv.c8 + iv.c10 + iv.c11);
  eq("identity 2e3=3c9+c11", 2 * iv.e3, 3 * iv.c9 + iv.c11);
  eq("identity e4=c10", iv.e4, iv.c10);
  eq("identity 2e6=c11", 2 * iv.e6, iv.c11);
  eq("identity c=c8+c9+c10+c11", iv.c, iv.c8 + iv.c9 + iv.c10 + iv.c11);
  eq("identity e=e2+e3+e4+e6", iv.e, iv.e2 + iv.e3 + iv.e4 + iv.e6);
  eq("identity c8=2f-c-4", iv.c8, 2 * iv.f - iv.c - 4);
  eq("identity c9+c10+c11=2c-2f+4", iv.c9 + iv.c10 + iv.c11, 2 * iv.c - 2 * iv.f + 4);
  add("parity c9 even", iv.c9 % 2 == 0, iv.c9 % 2 ? "c9=" + std::to_string(iv.c9) : "");
  add("parity c10 even", iv.c10 % 2 == 0, iv.c10 % 2 ? "c10=" + std::to_string(iv.c10) : "");

  add("inequality 2f-c-4>=0", 2 * iv.f - iv.c - 4 >= 0);
  if (iv.right_angled()) {
    skip("inequality c>=f", "right-angled: (12) not asserted");
    eq("right-angled c=f-2", iv.c, iv.f - 2);
    skip("inequality 4c-4f+c9-c10+4>=0", "right-angled: holds only for non-right-angled input");
  } else {
    add("inequality c>=f", iv.c >= iv.f);
    add("inequality 4c-4f+c9-c10+4>=0", 4 * iv.c - 4 * iv.f + iv.c9 - iv.c10 + 4 >= 0);
  }
  add("inequality 2c+2f-c9-8>0", 2 * iv.c + 2 * iv.f - iv.c9 - 8 > 0);
  add("inequality 4f-c9+c10-12>=0", 4 * iv.f - iv.c9 + iv.c10 - 12 >= 0);
  return rep;
}

bool AndreevReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::string AndreevReport::str() const {
  std::ostringstream out;
  out << render_check_list(checks);
  out << (ok() ? "  verdict: realizable" : "  verdict: NOT REALIZABLE") << "\n";
  return out.str();
}

AndreevReport andreev_check(const PolyhedronCombinatorics& P) {
  AndreevReport rep;
  auto add = [&rep](const std::string& name, CheckStatus st, const std::string& detail = "") {
    rep.checks.push_back({name, st, detail});
  };

  add("vertex angle sums", CheckStatus::Skip, "vacuous: ideal polyhedra have no vertices");

  // (b) three faces at a cusp: angle sum pi. In units of 1/12: sum 12/m == 12.
  bool b_ok = true;
  std::string b_detail;
  bool c_ok = true;
  std::string c_detail;
  for (const auto& cusp : P.cusps) {
    auto labels = cusp_labels(cusp, P);
    if (!labels) {
      b_ok = c_ok = false;
      b_detail = c_detail = "cusp (" + join_ints(cusp, ",") + ") has a non-edge pair";
      continue;
    }
    if (cusp.size() == 3) {
      int sum = 0;
      for (int m : *labels) sum += 12 / m;
      if (sum != 12) {
        b_ok = false;
        if (b_detail.empty())
          b_detail = "cusp (" + join_ints(cusp, ",") + ") has angle sum " + std::to_string(sum) +
                     "/12 pi";
      }
    } else {
      for (int m : *labels)
        if (m != 2) {
          c_ok = false;
          if (c_detail.empty())
            c_detail = "4-face cusp (" + join_ints(cusp, ",") + ") has a pi/" +
                       std::to_string(m) + " angle";
        }
    }
  }
  add("cusp triples sum to pi", b_ok ? CheckStatus::Pass : CheckStatus::Fail, b_detail);
  add("cusp quadruples all right angles", c_ok ? CheckStatus::Pass : CheckStatus::Fail,
      c_detail);

  auto share_common_cusp = [&P](const std::vector<int>& faces) {
    for (const auto& cusp : P.cusps) {
      bool all = true;
      for (int f : faces)
        if (std::find(cusp.begin(), cusp.end(), f) == cusp.end()) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };

  // (d) prismatic 3-circuits: pairwise adjacent triples with no common cusp
  // must have angle sum < pi.
  bool d_ok = true;
  std::string d_detail;
  int d_cases = 0;
  for (int i = 0; i < P.face_count; ++i)
    for (int j = i + 1; j < P.face_count; ++j) {
      auto mij = P.label(i, j);
      if (!mij) continue;
      for (int k = j + 1; k < P.face_count; ++k) {
        auto mik = P.label(i, k), mjk = P.label(j, k);
        if (!mik || !mjk) continue;
        if (share_common_cusp({i, j, k})) continue;
        ++d_cases;
        int sum = 12 / *mij + 12 / *mik + 12 / *mjk;
        if (sum >= 12) {
          d_ok = false;
          if (d_detail.empty())
            d_detail = "circuit (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + ") has angle sum " + std::to_string(sum) + "/12 pi";
        }
      }
    }
  add("prismatic 3-circuits", d_ok ? CheckStatus::Pass : CheckStatus::Fail,
      d_ok ? std::to_string(d_cases) + " circuit(s) checked" : d_detail);

  // (e) F_i adjacent to non-adjacent F_j, F_k sharing a cusp off F_i: the two
  // angles at F_i must not both be pi/2.
  bool e_ok = true;
  std::string e_detail;
  int e_cases = 0;
  for (int j = 0; j < P.face_count; ++j)
    for (int k = j + 1; k < P.face_count; ++k) {
      if (P.adjacent(j, k)) continue;
      for (const auto& cusp : P.cusps) {
        bool has_j = std::find(cusp.begin(), cusp.end(), j) != cusp.end();
        bool has_k = std::find(cusp.begin(), cusp.end(), k) != cusp.end();
        if (!has_j || !has_k) continue;
        for (int i = 0; i < P.face_count; ++i) {
          if (i == j || i == k) continue;
          if (std::find(cusp.begin(), cusp.end(), i) != cusp.end()) continue;
          auto mij = P.label(i, j), mik = P.label(i, k);
          if (!mij || !mik) continue;
          ++e_cases;
          if (*mij == 2 && *mik == 2) {
            e_ok = false;
            if (e_detail.empty())
              e_detail = "face " + std::to_string(i) + " meets " + std::to_string(j) + " and " +
                         std::to_string(k) + " at two right angles";
          }
        }
      }
    }
  add("non-adjacent pair angles", e_ok ? CheckStatus::Pass : CheckStatus::Fail,
      e_ok ? std::to_string(e_cases) + " configuration(s) checked" : e_detail);

  // (f) prismatic 4-circuits: cyclically adjacent quadruples with no common
  // cusp need an angle different from pi/2.
  bool f_ok = true;
  std::string f_detail;
  int f_cases = 0;
  for (int a = 0; a < P.face_count; ++a)
    for (int b = a + 1; b < P.face_count; ++b)
      for (int c = b + 1; c < P.face_count; ++c)
        for (int d = c + 1; d < P.face_count; ++d) {
          // Distinct 4-cycles on {a,b,c,d} with a first: a-b-c-d, a-b-d-c, a-c-b-d.
          const std::array<std::array<int, 4>, 3> orders = {
              {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& cyc : orders) {
            std::array<std::optional<int>, 4> lab;
            bool cycle = true;
            for (int i = 0; i < 4; ++i) {
              lab[i] = P.label(cyc[i], cyc[(i + 1) % 4]);
              if (!lab[i]) {
                cycle = false;
                break;
              }
            }
            if (!cycle) continue;
            if (share_common_cusp({a, b, c, d})) continue;
            ++f_cases;
            bool some_nonright = false;
            for (int i = 0; i < 4; ++i)
              if (*lab[i] != 2) some_nonright = true;
            if (!some_nonright) {
              f_ok = false;
              if (f_detail.empty())
                f_detail = "circuit (" + std::to_string(cyc[0]) + "," + std::to_string(cyc[1]) +
                           "," + std::to_string(cyc[2]) + "," + std::to_string(cyc[3]) +
                           ") is all right angles";
            }
          }
        }
  add("prismatic 4-circuits", f_ok ? CheckStatus::Pass : CheckStatus::Fail,
      f_ok ? std::to_string(f_cases) + " circuit(s) checked" : f_detail);

  return rep;
}

int FaceProfile::count_c(int m, int n) const {
  if (m > n) std::swap(m, n);
  auto it = c_mn.find({m, n});
  return it == c_mn.end() ? 0 : it->second;
}

int FaceProfile::count_e(int k) const {
  auto it = e_k.find(k);
  return it == e_k.end() ? 0 : it->second;
}

FaceProfile face_profile(const PolyhedronCombinatorics& P, int face) {
  if (face < 0 || face >= P.face_count) throw DomainError("face index out of range");

  std::vector<int> nbrs = P.neighbors(face);
  const int L = static_cast<int>(nbrs.size());
  if (L < 3) throw DomainError("non-simple boundary: face has fewer than 3 edges");
  auto nbr_pos = [&nbrs](int x) {
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), x);
    return (it != nbrs.end() && *it == x) ? static_cast<int>(it - nbrs.begin()) : -1;
  };

  // links[i] = cusps joining boundary edge (face, nbrs[i]) to its two walk
  // neighbours; each entry is (cusp index, other boundary neighbour).
  std::vector<std::vector<std::pair<int, int>>> links(L);
  for (int ci = 0; ci < static_cast<int>(P.cusps.size()); ++ci) {
    const auto& cusp = P.cusps[ci];
    auto it = std::find(cusp.begin(), cusp.end(), face);
    if (it == cusp.end()) continue;
    const int k = static_cast<int>(cusp.size());
    int p = static_cast<int>(it - cusp.begin());
    int prev = cusp[(p - 1 + k) % k], next = cusp[(p + 1) % k];
    int ip = nbr_pos(prev), in = nbr_pos(next);
    if (ip < 0 || in < 0)
      throw DomainError("non-simple boundary: cusp neighbour of face " + std::to_string(face) +
                        " is not adjacent to it");
    links[ip].push_back({ci, next});
    links[in].push_back({ci, prev});
  }
  for (int i = 0; i < L; ++i)
    if (links[i].size() != 2)
      throw DomainError("non-simple boundary: edge (" + std::to_string(face) + "," +
                        std::to_string(nbrs[i]) + ") meets " + std::to_string(links[i].size()) +
                        " cusps of the face");

  FaceProfile fp;
  fp.face = face;
  // Deterministic walk: start at the smallest neighbour, step toward the
  // smaller of its two linked successors.
  int cur = 0;
  auto first = links[0][0].second <= links[0][1].second ? links[0][0] : links[0][1];
  int prev_cusp = -1;
  {
    fp.boundary_neighbors.push_back(nbrs[0]);
    fp.boundary_cusps.push_back(first.first);
    prev_cusp = first.first;
    cur = nbr_pos(first.second);
  }
  while (cur != 0) {
    if (cur < 0 || static_cast<int>(fp.boundary_neighbors.size()) > L)
      throw DomainError("non-simple boundary: walk does not close");
    fp.boundary_neighbors.push_back(nbrs[cur]);
    auto step = links[cur][0].first == prev_cusp ? links[cur][1] : links[cur][0];
    fp.boundary_cusps.push_back(step.first);
    prev_cusp = step.first;
    cur = nbr_pos(step.second);
  }
  if (static_cast<int>(fp.boundary_neighbors.size()) != L)
    throw DomainError("non-simple boundary: walk closes after " +
                      std::to_string(fp.boundary_neighbors.size()) + " of " + std::to_string(L) +
                      " edges");

  for (int x : fp.boundary_neighbors) {
    auto m = P.label(face, x);
    fp.boundary_labels.push_back(*m);
    ++fp.e_k[*m];
  }
  for (int i = 0; i < L; ++i) {
    int m = fp.boundary_labels[i], n = fp.boundary_labels[(i + 1) % L];
    if (m > n) std::swap(m, n);
    ++fp.c_mn[{m, n}];
  }
  fp.cusp_count = L;
  return fp;
}

namespace {

std::vector<std::vector<int>> mapped_cusp_keys(const PolyhedronCombinatorics& P,
                                               const std::vector<int>& img) {
  std::vector<std::vector<int>> keys;
  keys.reserve(P.cusps.size());
  for (const auto& cusp : P.cusps) {
    std::vector<int> m(cusp.size());
    for (std::size_t i = 0; i < cusp.size(); ++i) m[i] = img[cusp[i]];
    keys.push_back(canonical_cycle(m));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool extend_isomorphism(const PolyhedronCombinatorics& P, const PolyhedronCombinatorics& Q,
                        std::vector<int>& img, std::vector<bool>& used, int next) {
  if (next == P.face_count) {
    for (const auto& e : P.edges) {
      auto m = Q.label(img[e.a], img[e.b]);
      if (!m || *m != e.m) return false;
    }
    // Edge counts match, so the image covers Q's edges exactly.
    return mapped_cusp_keys(P, img) ==
           [&Q] {
             auto keys = Q.cusps;
             std::sort(keys.begin(), keys.end());
             return keys;
           }();
  }
  for (int cand = 0; cand < Q.face_count; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int u = 0; u < next && ok; ++u) {
      auto mp = P.label(next, u);
      auto mq = Q.label(cand, img[u]);
      if (mp.has_value() != mq.has_value() || (mp && *mp != *mq)) ok = false;
    }
    if (!ok) continue;
    img[next] = cand;
    used[cand] = true;
    if (extend_isomorphism(P, Q, img, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const PolyhedronCombinatorics& P, const PolyhedronCombinatorics& Q) {
  if (P.face_count != Q.face_count || P.edges.size() != Q.edges.size() ||
      P.cusps.size() != Q.cusps.size())
    return false;
  auto label_multiset = [](const PolyhedronCombinatorics& X) {
    std::vector<int> all;
    for (const auto& e : X.edges) all.push_back(e.m);
    std::sort(all.begin(), all.end());
    return all;
  };
  if (label_multiset(P) != label_multiset(Q)) return false;
  std::vector<int> img(P.face_count, -1);
  std::vector<bool> used(Q.face_count, false);
  return extend_isomorphism(P, Q, img, used, 0);
}

namespace {

PolyhedronCombinatorics tetrahedron(const std::string& name, int m01, int m23, int m02, int m13,
                                    int m03, int m12) {
  std::vector<EdgeRecord> edges = {{0, 1, m01}, {2, 3, m23}, {0, 2, m02},
                                   {1, 3, m13}, {0, 3, m03}, {1, 2, m12}};
  std::vector<std::vector<int>> cusps = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  return make_polyhedron(name, 4, std::move(edges), std::move(cusps));
}

// Square pyramid: lateral faces 0..3 in cyclic order, base face 4. The base
// edges carry the given labels; lateral edges are right angles, so the apex
// is a four-face cusp.
PolyhedronCombinatorics square_pyramid(const std::string& name, int b0, int b1, int b2, int b3) {
  std::vector<EdgeRecord> edges;
  const int base = 4;
  const int blabel[4] = {b0, b1, b2, b3};
  for (int i = 0; i < 4; ++i) {
    edges.push_back({i, base, blabel[i]});
    edges.push_back({i, (i + 1) % 4, 2});
  }
  std::vector<std::vector<int>> cusps;
  for (int i = 0; i < 4; ++i) cusps.push_back({base, i, (i + 1) % 4});
  cusps.push_back({0, 1, 2, 3});
  return make_polyhedron(name, 5, std::move(edges), std::move(cusps));
}

// Right-angled ideal octahedron. Faces are octants of {+,-}^3 encoded by
// sign bits; faces sharing a quadrant of a coordinate plane are adjacent.
PolyhedronCombinatorics octahedron() {
  std::vector<EdgeRecord> edges;
  for (int f = 0; f < 8; ++f)
    for (int bit = 0; bit < 3; ++bit) {
      int g = f ^ (1 << bit);
      if (f < g) edges.push_back({f, g, 2});
    }
  std::vector<std::vector<int>> cusps;
  for (int axis = 0; axis < 3; ++axis)
    for (int sign = 0; sign < 2; ++sign) {
      // The four faces with this sign on this axis, in cyclic order: flip
      // the other two bits one at a time.
      int b1 = (axis + 1) % 3, b2 = (axis + 2) % 3;
      int base = sign << axis;
      cusps.push_back({base, base ^ (1 << b1), base ^ (1 << b1) ^ (1 << b2), base ^ (1 << b2)});
    }
  return make_polyhedron("OCT", 8, std::move(edges), std::move(cusps));
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"P1", "P2", "P3", "P4", "P5", "OCT"};
  return names;
}

PolyhedronCombinatorics catalog(const std::string& name) {
  if (name == "P1") return tetrahedron("P1", 3, 3, 2, 2, 6, 6);
  if (name == "P2") return tetrahedron("P2", 2, 2, 4, 4, 4, 4);
  if (name == "P3") return tetrahedron("P3", 3, 3, 3, 3, 3, 3);
  if (name == "P4") return square_pyramid("P4", 3, 6, 3, 6);
  if (name == "P5") return square_pyramid("P5", 4, 4, 4, 4);
  if (name == "OCT") return octahedron();
  throw DomainError("unknown catalog name: " + name);
}

std::ostream& operator<<(std::ostream& os, const ValidationReport& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const AndreevReport& r) { return os << r.str(); }

}  // namespace icox
