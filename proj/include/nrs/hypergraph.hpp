#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nrs {

// r-uniform hypergraph on vertices [0, n). Edges are stored as one flat
// array of m*r ids: each edge sorted ascending, the edge list sorted
// lexicographically, duplicates removed. That canonical form is what the
// text serialization and all determinism guarantees rely on.
class Hypergraph {
public:
  Hypergraph(int n, int r);
  // Builds from a flat list of m*r ids (any order); canonicalizes.
  Hypergraph(int n, int r, std::vector<int> flat);

  int vertex_count() const { return n_; }
  int arity() const { return r_; }
  std::int64_t edge_count() const {
    return r_ == 0 ? 0 : (std::int64_t)flat_.size() / r_;
  }
  std::span<const int> edge(std::int64_t i) const {
    return {flat_.data() + i * r_, (std::size_t)r_};
  }
  const std::vector<int>& flat() const { return flat_; }

  // Sorted-insert keeping canonical form; re-adding an edge is a no-op.
  void add_edge(std::span<const int> ids);
  void add_edge(std::initializer_list<int> ids) {
    add_edge(std::span<const int>(ids.begin(), ids.size()));
  }
  bool has_edge(std::span<const int> ids) const;  // any order
  bool has_edge(std::initializer_list<int> ids) const {
    return has_edge(std::span<const int>(ids.begin(), ids.size()));
  }

  bool operator==(const Hypergraph& o) const {
    return n_ == o.n_ && r_ == o.r_ && flat_ == o.flat_;
  }

private:
  void canonicalize();
  int n_ = 0;
  int r_ = 1;
  std::vector<int> flat_;
};

struct VerifyResult {
  bool ok = true;
  // Indices of a witness pair of edges meeting in >= s vertices.
  std::int64_t edge_a = -1, edge_b = -1;
};

// Design check: every pair of edges meets in fewer than s vertices,
// equivalently no s-subset lies in two edges. Detection hashes every
// s-subset of every edge and looks for collisions across edges; the
// extraction pass is OpenMP-parallel (threads = 0 means library default).
// Deterministic: same input gives the same verdict and witness.
VerifyResult verify_design(const Hypergraph& h, int s, int threads = 0);

// Serial reference: O(m^2) pairwise intersection scan. Kept as the test
// oracle for verify_design and as the benchmark baseline.
VerifyResult verify_design_pairwise(const Hypergraph& h, int s);

struct IndependenceResult {
  bool independent = true;
  std::int64_t containing_edge = -1;
};

// S contains no edge. Duplicate ids in S are tolerated; out-of-range throws.
IndependenceResult is_independent(const Hypergraph& h, std::span<const int> s);

// Subhypergraph on the id-set S (sorted, deduplicated), vertices re-indexed
// by rank in S; keeps exactly the edges entirely inside S.
Hypergraph induced(const Hypergraph& h, std::vector<int> s);

// Replaces each edge by its r_prime lexicographically least ids; duplicate
// images merge.
Hypergraph shadow(const Hypergraph& h, int r_prime);

// Direct product: vertex (u, v) -> u * n2 + v, edges all E1 x E2.
Hypergraph product(const Hypergraph& a, const Hypergraph& b);

// Restriction to the first n vertices: keeps edges with all ids < n.
Hypergraph trim(const Hypergraph& h, int n);

// Construction record attached to built systems: which operations produced
// the hypergraph and what parameters each stage claims.
struct Provenance {
  enum class Kind { ApSystem, FiveFour, Product, Shadow, Trim };
  Kind kind = Kind::ApSystem;
  int n = 0, r = 0, s = 0;  // claimed parameters of this stage's output
  int p1 = 0, p2 = 0;       // ApSystem: r,k  FiveFour: k  Shadow: r'  Trim: n
  std::vector<Provenance> children;
};

struct DesignParams {
  int n = 0, r = 0, s = 0;
  std::optional<Provenance> provenance;

  DesignParams(int n_, int r_, int s_, std::optional<Provenance> prov = std::nullopt);
};

}  // namespace nrs
