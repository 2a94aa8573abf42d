#pragma once

#include <cstdint>
#include <vector>

#include "icox/combinatorics.hpp"

namespace icox::testutil {

// Deterministic xorshift generator so frozen expectations stay frozen.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Invariant vectors consistent with all the counting identities: pick the
// four cusp-type counts (the independent data), derive the edge counts and
// the face count, and keep only combinations satisfying the inequality side
// conditions. Both right-angled and generic vectors occur.
inline std::vector<InvariantVector> random_consistent_invariants(int want, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<InvariantVector> out;
  while (static_cast<int>(out.size()) < want) {
    InvariantVector iv;
    iv.c8 = rng.below(9);
    iv.c9 = 2 * rng.below(4);
    iv.c10 = 2 * rng.below(4);
    iv.c11 = 2 * rng.below(5);
    iv.e2 = (4 * iv.c8 + iv.c10 + iv.c11) / 2;
    iv.e3 = (3 * iv.c9 + iv.c11) / 2;
    iv.e4 = iv.c10;
    iv.e6 = iv.c11 / 2;
    iv.e = iv.e2 + iv.e3 + iv.e4 + iv.e6;
    iv.c = iv.c8 + iv.c9 + iv.c10 + iv.c11;
    iv.f = iv.e - iv.c + 2;
    if (iv.f < 4 || iv.c < 4) continue;
    if (iv.c8 != 2 * iv.f - iv.c - 4) continue;
    if (iv.right_angled()) {
      if (iv.c != iv.f - 2) continue;
    } else {
      if (iv.c < iv.f) continue;
      if (4 * iv.c - 4 * iv.f + iv.c9 - iv.c10 + 4 < 0) continue;
    }
    if (2 * iv.c + 2 * iv.f - iv.c9 - 8 <= 0) continue;
    if (4 * iv.f - iv.c9 + iv.c10 - 12 < 0) continue;
    out.push_back(iv);
  }
  return out;
}

// Right-angled ideal antiprism over a square: 10 faces, 8 four-face cusps.
// Face 0 is the top square, face 1 the bottom square, faces 2..9 the
// lateral triangles in equatorial cyclic order (even ones touch the top).
inline PolyhedronCombinatorics square_antiprism() {
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < 4; ++i) edges.push_back({0, 2 + 2 * i, 2});
  for (int i = 0; i < 4; ++i) edges.push_back({1, 3 + 2 * i, 2});
  for (int i = 0; i < 8; ++i) edges.push_back({2 + i, 2 + (i + 1) % 8, 2});
  std::vector<std::vector<int>> cusps;
  for (int i = 0; i < 4; ++i)
    cusps.push_back({0, 2 + (2 * i) % 8, 2 + (2 * i + 1) % 8, 2 + (2 * i + 2) % 8});
  for (int i = 0; i < 4; ++i)
    cusps.push_back({1, 2 + (2 * i + 1) % 8, 2 + (2 * i + 2) % 8, 2 + (2 * i + 3) % 8});
  return make_polyhedron("ANTIPRISM4", 10, std::move(edges), std::move(cusps));
}

}  // namespace icox::testutil
