#include "icox/glue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "icox/growth.hpp"

namespace icox {

namespace {

struct PairOutcome {
  bool glueable = false;
  bool merge = false;  // true: faces merge and the edge vanishes
  int label = 0;       // combined label when not a merge
  std::string reason;
};

PairOutcome combine_labels(int m1, int m2) {
  if (m1 == 2 && m2 == 2) return {true, true, 0, "pi/2 + pi/2 = pi, faces merge"};
  if (m1 == 4 && m2 == 4) return {true, false, 2, "pi/4 + pi/4 = pi/2"};
  if (m1 == 6 && m2 == 6) return {true, false, 3, "pi/6 + pi/6 = pi/3"};
  if ((m1 == 3 && m2 == 6) || (m1 == 6 && m2 == 3))
    return {true, false, 2, "pi/3 + pi/6 = pi/2"};
  return {false, false, 0,
          "pi/" + std::to_string(m1) + " + pi/" + std::to_string(m2) +
              " is not pi or a Coxeter submultiple of pi"};
}

struct MatchingLayout {
  FaceProfile fp, fq;
  int length = 0;
  std::vector<int> partner_q_of;     // indexed by P walk position: Q walk position
  std::map<int, int> q_face_of;      // P neighbour face -> Q neighbour face
  // boundary cusp j of P (between walk edges j, j+1) pairs with this Q cusp
  // position (between Q walk edges pos, pos+1).
  std::vector<int> q_cusp_pos_of;
};

MatchingLayout analyze_matching(const PolyhedronCombinatorics& P,
                                const PolyhedronCombinatorics& Q, const FaceMatching& match) {
  MatchingLayout lay;
  lay.fp = face_profile(P, match.face_p);
  lay.fq = face_profile(Q, match.face_q);
  const int L = static_cast<int>(lay.fp.boundary_neighbors.size());
  lay.length = L;
  if (static_cast<int>(lay.fq.boundary_neighbors.size()) != L)
    throw DomainError("boundary walks have different lengths (" + std::to_string(L) + " vs " +
                      std::to_string(lay.fq.boundary_neighbors.size()) + ")");
  if (static_cast<int>(match.pairs.size()) != L)
    throw DomainError("matching must pair all " + std::to_string(L) + " boundary edges");

  std::map<int, int> pos_p, pos_q;
  for (int i = 0; i < L; ++i) {
    pos_p[lay.fp.boundary_neighbors[i]] = i;
    pos_q[lay.fq.boundary_neighbors[i]] = i;
  }
  lay.partner_q_of.assign(L, -1);
  for (const auto& [a, b] : match.pairs) {
    auto ia = pos_p.find(a);
    auto ib = pos_q.find(b);
    if (ia == pos_p.end())
      throw DomainError("face " + std::to_string(a) + " is not on the boundary of face " +
                        std::to_string(match.face_p));
    if (ib == pos_q.end())
      throw DomainError("face " + std::to_string(b) + " is not on the boundary of face " +
                        std::to_string(match.face_q));
    if (lay.partner_q_of[ia->second] != -1)
      throw DomainError("boundary edge matched twice");
    if (lay.q_face_of.count(a)) throw DomainError("boundary edge matched twice");
    lay.partner_q_of[ia->second] = ib->second;
    lay.q_face_of[a] = b;
  }
  std::vector<bool> hit(L, false);
  for (int i = 0; i < L; ++i) {
    if (lay.partner_q_of[i] < 0) throw DomainError("matching is not a bijection");
    if (hit[lay.partner_q_of[i]]) throw DomainError("matching is not a bijection");
    hit[lay.partner_q_of[i]] = true;
  }
  // Consecutive edges must map to consecutive edges: the position map is a
  // rotation or a reflection of the cycle.
  int step = ((lay.partner_q_of[1] - lay.partner_q_of[0]) % L + L) % L;
  if (step != 1 && step != L - 1)
    throw DomainError("matching does not carry consecutive edges to consecutive edges");
  for (int i = 0; i < L; ++i) {
    int expect = ((lay.partner_q_of[i] + step) % L + L) % L;
    if (lay.partner_q_of[(i + 1) % L] != expect)
      throw DomainError("matching does not carry consecutive edges to consecutive edges");
  }
  lay.q_cusp_pos_of.assign(L, -1);
  for (int i = 0; i < L; ++i) {
    int u = lay.partner_q_of[i], v = lay.partner_q_of[(i + 1) % L];
    lay.q_cusp_pos_of[i] = (v == (u + 1) % L) ? u : v;
  }
  return lay;
}

}  // namespace

void check_matching_shape(const PolyhedronCombinatorics& P, const PolyhedronCombinatorics& Q,
                          const FaceMatching& match) {
  analyze_matching(P, Q, match);
}

bool GlueCheckReport::glueable() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::string GlueCheckReport::str() const {
  return render_check_list(checks) + (glueable() ? "  verdict: glueable" : "  verdict: NOT glueable") +
         "\n";
}

GlueCheckReport check_glueable(const PolyhedronCombinatorics& P,
                               const PolyhedronCombinatorics& Q, const FaceMatching& match) {
  GlueCheckReport rep;
  MatchingLayout lay;
  try {
    lay = analyze_matching(P, Q, match);
  } catch (const DomainError& err) {
    rep.checks.push_back({"matching shape", CheckStatus::Fail, err.what()});
    return rep;
  }
  rep.checks.push_back({"matching shape", CheckStatus::Pass,
                        "consecutive-preserving boundary bijection of length " +
                            std::to_string(lay.length)});

  const int L = lay.length;
  // Edge combination rules.
  for (int i = 0; i < L; ++i) {
    int a = lay.fp.boundary_neighbors[i];
    int b = lay.q_face_of.at(a);
    int m1 = lay.fp.boundary_labels[i];
    int m2 = *Q.label(match.face_q, b);
    PairOutcome oc = combine_labels(m1, m2);
    std::string name = "edge (" + std::to_string(match.face_p) + "," + std::to_string(a) +
                       ") pi/" + std::to_string(m1) + " <-> (" + std::to_string(match.face_q) +
                       "," + std::to_string(b) + ") pi/" + std::to_string(m2);
    rep.checks.push_back({name, oc.glueable ? CheckStatus::Pass : CheckStatus::Fail, oc.reason});
  }

  // Predicted boundary cusp links of the glued polyhedron.
  for (int i = 0; i < L; ++i) {
    // Labels around the glued cusp: the non-boundary labels of both cusp
    // cycles survive; each junction contributes its combined label unless it
    // merges.
    int inext = (i + 1) % L;
    int m1 = lay.fp.boundary_labels[i];
    int m1p = lay.fp.boundary_labels[inext];
    int qpos = lay.q_cusp_pos_of[i];
    // Junction at walk edge i pairs labels (m1, partner), similarly i+1.
    PairOutcome j1 = combine_labels(m1, *Q.label(match.face_q, lay.q_face_of.at(
                                               lay.fp.boundary_neighbors[i])));
    PairOutcome j2 = combine_labels(m1p, *Q.label(match.face_q, lay.q_face_of.at(
                                                lay.fp.boundary_neighbors[inext])));
    if (!j1.glueable || !j2.glueable) continue;  // already reported above

    const auto& pc = P.cusps[lay.fp.boundary_cusps[i]];
    const auto& qc = Q.cusps[lay.fq.boundary_cusps[qpos]];
    std::vector<int> labels;
    // Interior labels of the P cusp cycle (edges not incident to face_p).
    auto interior_labels = [&labels](const std::vector<int>& cusp, int face,
                                     const PolyhedronCombinatorics& X) {
      const int k = static_cast<int>(cusp.size());
      for (int t = 0; t < k; ++t) {
        int u = cusp[t], v = cusp[(t + 1) % k];
        if (u == face || v == face) continue;
        labels.push_back(*X.label(u, v));
      }
    };
    interior_labels(pc, match.face_p, P);
    interior_labels(qc, match.face_q, Q);
    if (!j1.merge) labels.push_back(j1.label);
    if (!j2.merge) labels.push_back(j2.label);

    std::sort(labels.begin(), labels.end());
    bool ok;
    if (labels.size() == 4)
      ok = labels == std::vector<int>{2, 2, 2, 2};
    else if (labels.size() == 3)
      ok = labels == std::vector<int>{3, 3, 3} || labels == std::vector<int>{2, 4, 4} ||
           labels == std::vector<int>{2, 3, 6};
    else
      ok = false;
    std::string ls;
    for (std::size_t t = 0; t < labels.size(); ++t)
      ls += (t ? "," : "") + std::to_string(labels[t]);
    rep.checks.push_back({"glued cusp link at boundary cusp " + std::to_string(i),
                          ok ? CheckStatus::Pass : CheckStatus::Fail,
                          "labels {" + ls + "}"});
  }
  return rep;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Cusp cycle with face removed, as the path from one flank around to the
// other (never through face).
std::vector<int> cusp_path_without(const std::vector<int>& cusp, int face) {
  const int k = static_cast<int>(cusp.size());
  int p = -1;
  for (int i = 0; i < k; ++i)
    if (cusp[i] == face) p = i;
  if (p < 0) throw InternalContradiction("cusp does not contain the face");
  std::vector<int> path;
  for (int i = 1; i < k; ++i) path.push_back(cusp[(p + i) % k]);
  return path;
}

}  // namespace

PolyhedronCombinatorics glue(const PolyhedronCombinatorics& P, const PolyhedronCombinatorics& Q,
                             const FaceMatching& match) {
  GlueCheckReport pre = check_glueable(P, Q, match);
  if (!pre.glueable())
    throw DomainError("matching is not glueable:\n" + pre.str());
  MatchingLayout lay = analyze_matching(P, Q, match);
  const int L = lay.length;
  const int fP = P.face_count;
  const int total = fP + Q.face_count;
  const int F = match.face_p;
  const int Fq = fP + match.face_q;
  auto qid = [fP](int qface) { return fP + qface; };

  UnionFind uf(total);
  std::vector<bool> merge_at(L, false);
  for (int i = 0; i < L; ++i) {
    int a = lay.fp.boundary_neighbors[i];
    int b = lay.q_face_of.at(a);
    PairOutcome oc = combine_labels(lay.fp.boundary_labels[i], *Q.label(match.face_q, b));
    merge_at[i] = oc.merge;
    if (oc.merge) uf.unite(a, qid(b));
  }

  // Edges, keyed by union-find representatives.
  std::map<std::pair<int, int>, int> edge_map;
  auto add_edge = [&](int u, int v, int m) {
    u = uf.find(u);
    v = uf.find(v);
    if (u == v) throw DomainError("glue produced an edge from a face to itself");
    if (u > v) std::swap(u, v);
    if (!edge_map.emplace(std::make_pair(u, v), m).second)
      throw DomainError("glue produced two edges between one face pair");
    };
  for (const auto& e : P.edges)
    if (e.a != F && e.b != F) add_edge(e.a, e.b, e.m);
  for (const auto& e : Q.edges)
    if (e.a != match.face_q && e.b != match.face_q) add_edge(qid(e.a), qid(e.b), e.m);
  for (int i = 0; i < L; ++i) {
    if (merge_at[i]) continue;
    int a = lay.fp.boundary_neighbors[i];
    int b = lay.q_face_of.at(a);
    PairOutcome oc = combine_labels(lay.fp.boundary_labels[i], *Q.label(match.face_q, b));
    add_edge(a, qid(b), oc.label);
  }

  // Cusps.
  std::vector<std::vector<int>> cusps;
  for (const auto& cusp : P.cusps) {
    if (std::find(cusp.begin(), cusp.end(), F) != cusp.end()) continue;
    std::vector<int> m;
    for (int f : cusp) m.push_back(uf.find(f));
    cusps.push_back(std::move(m));
  }
  for (const auto& cusp : Q.cusps) {
    if (std::find(cusp.begin(), cusp.end(), match.face_q) != cusp.end()) continue;
    std::vector<int> m;
    for (int f : cusp) m.push_back(uf.find(qid(f)));
    cusps.push_back(std::move(m));
  }
  for (int i = 0; i < L; ++i) {
    const auto& pc = P.cusps[lay.fp.boundary_cusps[i]];
    const auto& qc = Q.cusps[lay.fq.boundary_cusps[lay.q_cusp_pos_of[i]]];
    std::vector<int> path_p = cusp_path_without(pc, F);
    std::vector<int> path_q_faces = cusp_path_without(qc, match.face_q);
    std::vector<int> path_q;
    for (int f : path_q_faces) path_q.push_back(qid(f));
    // Orient the Q path to start at the partner of the P path's end.
    int partner_of_end = qid(lay.q_face_of.at(path_p.back()));
    if (path_q.front() != partner_of_end) std::reverse(path_q.begin(), path_q.end());
    if (path_q.front() != partner_of_end ||
        path_q.back() != qid(lay.q_face_of.at(path_p.front())))
      throw InternalContradiction("boundary cusp paths do not line up");
    std::vector<int> cycle;
    for (int f : path_p) cycle.push_back(uf.find(f));
    for (int f : path_q) cycle.push_back(uf.find(f));
    // Collapse the two junctions where the flanking faces merged.
    if (cycle.size() > 1 && cycle[path_p.size()] == cycle[path_p.size() - 1])
      cycle.erase(cycle.begin() + static_cast<long>(path_p.size()));
    if (cycle.size() > 1 && cycle.back() == cycle.front()) cycle.pop_back();
    cusps.push_back(std::move(cycle));
  }

  // Compact face numbering over the surviving representatives.
  std::map<int, int> compact;
  for (int x = 0; x < total; ++x) {
    int r = uf.find(x);
    if (r == uf.find(F) || r == uf.find(Fq)) continue;
    if (!compact.count(r)) {
      int id = static_cast<int>(compact.size());
      compact[r] = id;
    }
  }
  std::vector<EdgeRecord> edges;
  for (const auto& [pair, m] : edge_map)
    edges.push_back({compact.at(pair.first), compact.at(pair.second), m});
  for (auto& cusp : cusps)
    for (int& f : cusp) f = compact.at(f);

  PolyhedronCombinatorics glued;
  try {
    glued = make_polyhedron(P.name + "*" + Q.name, static_cast<int>(compact.size()),
                            std::move(edges), std::move(cusps));
  } catch (const DomainError& err) {
    throw DomainError(std::string("glue produced an invalid model: ") + err.what());
  }
  ValidationReport post = validate(glued);
  if (!post.ok())
    throw DomainError("glued model fails validation:\n" + post.str());
  return glued;
}

std::vector<FaceMatching> enumerate_matchings(const PolyhedronCombinatorics& P,
                                              const PolyhedronCombinatorics& Q, int face_p,
                                              int face_q) {
  std::vector<FaceMatching> out;
  FaceProfile fp = face_profile(P, face_p);
  FaceProfile fq = face_profile(Q, face_q);
  const int L = static_cast<int>(fp.boundary_neighbors.size());
  if (static_cast<int>(fq.boundary_neighbors.size()) != L) return out;
  std::set<std::vector<std::pair<int, int>>> seen;
  for (int dir : {1, -1})
    for (int shift = 0; shift < L; ++shift) {
      FaceMatching m;
      m.face_p = face_p;
      m.face_q = face_q;
      for (int i = 0; i < L; ++i) {
        int j = ((shift + dir * i) % L + L) % L;
        m.pairs.push_back({fp.boundary_neighbors[i], fq.boundary_neighbors[j]});
      }
      auto key = m.pairs;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      if (check_glueable(P, Q, m).glueable()) out.push_back(std::move(m));
    }
  return out;
}

bool GlueIdentityReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::string GlueIdentityReport::str() const { return render_check_list(checks); }

GlueIdentityReport glue_identities_check(const PolyhedronCombinatorics& P,
                                         const PolyhedronCombinatorics& Q,
                                         const FaceMatching& match,
                                         const PolyhedronCombinatorics& glued) {
  GlueIdentityReport rep;
  FaceProfile fp = face_profile(P, match.face_p);
  InvariantVector ivp = compute_invariants(P);
  InvariantVector ivq = compute_invariants(Q);
  InvariantVector ivg = compute_invariants(glued);

  bool mixed_pair = false;
  for (const auto& [a, b] : match.pairs) {
    int m1 = *P.label(match.face_p, a);
    int m2 = *Q.label(match.face_q, b);
    if ((m1 == 3 && m2 == 6) || (m1 == 6 && m2 == 3)) mixed_pair = true;
  }

  auto eq = [&rep](const std::string& name, long long lhs, long long rhs) {
    rep.checks.push_back({name, lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail,
                          std::to_string(lhs) + (lhs == rhs ? " = " : " != ") +
                              std::to_string(rhs)});
  };
  eq("identity c(glued) = c(P)+c(Q)-c(F)", ivg.c, ivp.c + ivq.c - fp.cusp_count);
  if (mixed_pair)
    rep.checks.push_back({"identity c9(glued) = c9(P)+c9(Q)+c26(F)", CheckStatus::Skip,
                          "NotApplicable: matching pairs a pi/3-edge with a pi/6-edge"});
  else
    eq("identity c9(glued) = c9(P)+c9(Q)+c26(F)", ivg.c9, ivp.c9 + ivq.c9 + fp.count_c(2, 6));
  eq("identity c10(glued) = c10(P)+c10(Q)-2c44(F)-c24(F)", ivg.c10,
     ivp.c10 + ivq.c10 - 2 * fp.count_c(4, 4) - fp.count_c(2, 4));
  eq("identity f(glued) = f(P)+f(Q)-e2(F)-2", ivg.f, ivp.f + ivq.f - fp.count_e(2) - 2);
  return rep;
}

std::string RateMonotonicityReport::str() const {
  std::ostringstream out;
  out << "tau(P):     " << (cert_p.tau.exact() ? rat_str(cert_p.tau.lo) + " (exact)"
                                               : cert_p.tau.str())
      << "\n";
  out << "tau(Q):     " << (cert_q.tau.exact() ? rat_str(cert_q.tau.lo) + " (exact)"
                                               : cert_q.tau.str())
      << "\n";
  out << "tau(glued): " << (cert_glued.tau.exact() ? rat_str(cert_glued.tau.lo) + " (exact)"
                                                   : cert_glued.tau.str())
      << "\n";
  out << "tau(glued) > max(tau(P), tau(Q)) with disjoint enclosures: "
      << (tau_increases ? "true" : "false") << "\n";
  out << "g_glued > g_P and g_Q at 64 rational points of (0,1/2): "
      << (pointwise_dominance ? "true" : "false") << "\n";
  return out.str();
}

RateMonotonicityReport rate_monotonicity_check(const PolyhedronCombinatorics& P,
                              const PolyhedronCombinatorics& Q,
                              const PolyhedronCombinatorics& glued, const Rat& tol) {
  RateMonotonicityReport rep;
  Rat t = tol;
  for (int attempt = 0;; ++attempt) {
    rep.cert_p = growth_rate(P, t);
    rep.cert_q = growth_rate(Q, t);
    rep.cert_glued = growth_rate(glued, t);
    // tau(glued) > tau(P), tau(Q) iff r0(glued) < r0(P), r0(Q).
    Rat lo_inputs = std::min(rep.cert_p.r0.lo, rep.cert_q.r0.lo);
    if (rep.cert_glued.r0.hi < lo_inputs) {
      rep.tau_increases = true;
      break;
    }
    // Certified failure: the glued dominant root sits strictly above one input's.
    if (rep.cert_glued.r0.lo > std::min(rep.cert_p.r0.hi, rep.cert_q.r0.hi)) {
      rep.tau_increases = false;
      break;
    }
    if (attempt >= 20)
      throw InconclusiveError("tau enclosures still overlap after refinement");
    t /= 1024;
  }

  IntPolynomial gp = g_polynomial(compute_invariants(P));
  IntPolynomial gq = g_polynomial(compute_invariants(Q));
  IntPolynomial gg = g_polynomial(compute_invariants(glued));
  rep.pointwise_dominance = true;
  for (int k = 1; k <= 64; ++k) {
    Rat x = make_rat(k, 130);
    Rat vg = gg.eval(x);
    if (!(vg > gp.eval(x) && vg > gq.eval(x))) {
      rep.pointwise_dominance = false;
      break;
    }
  }
  return rep;
}

}  // namespace icox
