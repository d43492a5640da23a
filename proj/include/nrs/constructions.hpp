#pragma once

#include <cstdint>
#include <vector>

#include "nrs/gf2.hpp"
#include "nrs/hypergraph.hpp"

namespace nrs {

// All arithmetic progressions {a + i*d : 0 <= i < r} in Z_r^k whose
// difference d has additive order exactly r, as edges on n = r^k vertices
// (vertex id = base-r encoding of the point). Every pair of distinct edges
// meets in fewer than 2 vertices when r is prime; composite moduli admit
// overlapping progressions, see the tests.
Hypergraph ap_system(int r, int k);

// One recursion level of the 5-uniform construction: three relabeled copies
// of the level-k system, glued by cross edges over GF(2^ell). Vertex j of
// any copy embeds as the field element with bit pattern j + 1; that map is
// injective and misses zero because 3^k < 2^ell.
struct FiveFourLevel {
  int k;          // each copy has 3^k vertices
  int copy_size;  // 3^k
  int ell;        // 2^ell >= 3^k > 2^(ell-1)
  GF2Field field;
  std::vector<std::uint32_t> psi;  // psi[j] = j + 1, shared by all copies
};

FiveFourLevel make_five_four_level(int k);

// Flat list of the cross edges {a, a', b, b', c} (ids in the 3*3^k vertex
// space): offsets a < a' from copy one, slopes b < b' from copy two, and c
// in copy three pinned by psi(a) ^ psi(a') = (psi(b) ^ psi(b')) * psi(c).
// The pair (a,a'), (b,b') contributes an edge only when that c lands in
// the third copy's image. Output is deterministic for any thread count.
std::vector<int> five_four_cross(const FiveFourLevel& level, int threads = 0);

// Recursive (3^k, 5, 4)-system: edgeless for k <= 3, otherwise three copies
// of the previous level plus all cross edges.
Hypergraph five_four(int k, int threads = 0);

// Exponents of s - 1 = 3^l1 * 4^l2 * 5^l3 * 6^l4, chosen to maximize l1,
// then l2, then l3.
struct SExponents {
  int l1 = 0, l2 = 0, l3 = 0, l4 = 0;
};

SExponents decompose_s(int s);

// Largest uniformity the composite pipeline supports for this strength:
// f * (s - 1) where f is the smallest base factor with nonzero exponent
// (6 when all of l1, l2, l3 are zero).
int capacity(const SExponents& e);

struct BuildResult {
  Hypergraph h;
  DesignParams params;
};

// (n, r, s)-system pipeline. Strength 2 shadows and trims an ap_system(6,k)
// and accepts 3 <= r <= 6; larger strengths peel one base factor f off
// s - 1, recurse on two (ceil(sqrt(n)), ., .)-systems, take their product,
// then shadow and trim, accepting 2s <= r <= capacity.
BuildResult build_rs_system(int n, int r, int s);

}  // namespace nrs
