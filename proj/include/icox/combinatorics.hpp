#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icox/errors.hpp"

namespace icox {

// Dihedral angle pi/m; ideal Coxeter polyhedra only admit m in {2, 3, 4, 6}.
struct AngleLabel {
  int m = 2;
};

bool is_valid_angle_label(int m);

// Edge between two faces, carrying the dihedral-angle label pi/m.
// Normalized so that a < b.
struct EdgeRecord {
  int a = 0;
  int b = 0;
  int m = 2;

  auto operator<=>(const EdgeRecord&) const = default;
};

enum class CuspType { TypeI, TypeII, TypeIII, TypeIV };

std::string cusp_type_name(CuspType t);

// Combinatorial description of an ideal Coxeter polyhedron in H^3: faces,
// angle-labelled edges, and the cyclic face sequence around each cusp.
// No geometric data is stored; realizability is checked combinatorially.
//
// Construction normalizes the representation: edges are sorted, and each
// cusp cycle is rotated/reflected to a canonical form (smallest face first,
// smaller successor next). Cusp cycles are unoriented throughout.
struct PolyhedronCombinatorics {
  std::string name;
  int face_count = 0;
  std::vector<EdgeRecord> edges;
  std::vector<std::vector<int>> cusps;

  bool operator==(const PolyhedronCombinatorics&) const = default;

  // Label of the edge between faces x and y, if present.
  std::optional<int> label(int x, int y) const;
  bool adjacent(int x, int y) const { return label(x, y).has_value(); }
  std::vector<int> neighbors(int face) const;
  bool right_angled() const;
  // Cusps whose cycle contains the face.
  std::vector<int> cusps_of_face(int face) const;
};

// Structural constructor used by the parser, the catalog and the gluing
// code. Throws DomainError on: face_count < 4, bad face indices, labels
// outside {2,3,4,6}, duplicate face pairs, cusp lengths outside {3,4},
// repeated faces inside one cusp cycle.
PolyhedronCombinatorics make_polyhedron(std::string name, int face_count,
                                        std::vector<EdgeRecord> edges,
                                        std::vector<std::vector<int>> cusps);

// ICP text format:
//   name <identifier>
//   faces <F>                  (F >= 4)
//   edge <i> <j> <m>           (0 <= i < j < F, m in {2,3,4,6})
//   cusp <f1> ... <fk>         (k in {3,4}, cyclic order)
// '#' starts a comment; blank lines are ignored.
PolyhedronCombinatorics parse_icp(const std::string& text);
PolyhedronCombinatorics parse_icp_file(const std::string& path);
std::string serialize_icp(const PolyhedronCombinatorics& P);

// Classifies one cusp per the four admissible link patterns:
//   TypeI   four faces, labels {2,2,2,2}
//   TypeII  three faces, labels {3,3,3}
//   TypeIII three faces, labels {2,4,4}
//   TypeIV  three faces, labels {2,3,6}
// Throws DomainError when a consecutive pair is not an edge, or an
// angle-sum violation (with the offending label multiset) otherwise.
CuspType classify_cusp(const std::vector<int>& cusp, const PolyhedronCombinatorics& P);

// The counts that drive every growth/volume formula.
struct InvariantVector {
  long long f = 0, c = 0, e = 0;
  long long e2 = 0, e3 = 0, e4 = 0, e6 = 0;
  long long c8 = 0, c9 = 0, c10 = 0, c11 = 0;

  bool operator==(const InvariantVector&) const = default;
  bool right_angled() const { return c9 == 0 && c10 == 0 && c11 == 0; }
  std::string str() const;
};

InvariantVector compute_invariants(const PolyhedronCombinatorics& P);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

std::string render_check_list(const std::vector<CheckResult>& checks);

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::optional<InvariantVector> invariants;

  bool ok() const;
  std::string str() const;
};

// Runs every combinatorial check and reports all failures: edge/cusp
// coverage, cusp classification, the counting identities, parity of the
// type-(ii)/(iii) cusp counts, and the growth-side inequalities. The
// inequalities tied to the non-right-angled hypothesis are skipped (with a
// note) on right-angled input, which instead must satisfy c = f - 2.
ValidationReport validate(const PolyhedronCombinatorics& P);

struct AndreevReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string str() const;
};

// Combinatorial realizability conditions for acute-angled almost simple
// polyhedra, specialized to the ideal case: cusp angle sums (b)/(c),
// prismatic 3-circuits (d), the non-adjacent-pair condition (e), and
// prismatic 4-circuits (f). Vertex conditions are vacuous here and are
// reported as such.
AndreevReport andreev_check(const PolyhedronCombinatorics& P);

// Boundary data of one face, reconstructed by walking its incident edges
// through the cusp cycles.
struct FaceProfile {
  int face = 0;
  // Walk order: boundary edge i is (face, boundary_neighbors[i]) with label
  // boundary_labels[i]; boundary_cusps[i] sits between edges i and i+1.
  std::vector<int> boundary_neighbors;
  std::vector<int> boundary_labels;
  std::vector<int> boundary_cusps;
  // Counts of boundary edges by label.
  std::map<int, int> e_k;
  // c_mn[{m, n}] with m <= n: cusps of the face whose two boundary edges
  // carry labels m and n.
  std::map<std::pair<int, int>, int> c_mn;
  int cusp_count = 0;

  int count_c(int m, int n) const;
  int count_e(int k) const;
};

// Throws DomainError("non-simple boundary ...") when the incident edges do
// not close into a single cycle.
FaceProfile face_profile(const PolyhedronCombinatorics& P, int face);

// Built-in models: P1, P2, P3 (the ideal simplices), P4, P5 (the square
// pyramids), OCT (the right-angled octahedron). Unknown names throw.
PolyhedronCombinatorics catalog(const std::string& name);
const std::vector<std::string>& catalog_names();

// Face bijection preserving edge labels and cusp cycles up to rotation and
// reflection, found by backtracking.
bool is_isomorphic(const PolyhedronCombinatorics& P, const PolyhedronCombinatorics& Q);

std::ostream& operator<<(std::ostream& os, const ValidationReport& r);
std::ostream& operator<<(std::ostream& os, const AndreevReport& r);

}  // namespace icox
