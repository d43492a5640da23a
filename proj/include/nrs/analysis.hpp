#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nrs/hypergraph.hpp"

namespace nrs {

struct AlphaResult {
  int lower = 0;  // size of the best independent set found
  int upper = 0;  // certified upper bound; equals lower when exact
  bool exact = false;
  std::int64_t nodes = 0;
  std::vector<int> witness;  // achieves lower, always independent
};

// Branch and bound on vertices: branch on a vertex of maximum degree among
// the edges still completable, include-first; prune with chosen + available
// minus a greedy packing of disjoint live edges. Runs until done or until
// the node budget is spent, in which case lower/upper are certified bounds
// from the best set found and the open frontier.
AlphaResult alpha_exact(const Hypergraph& h, std::int64_t budget = 100'000'000);

struct GreedyResult {
  int best = 0;
  std::vector<int> witness;
};

// Multi-start randomized greedy with a bounded exchange step. Iteration i
// runs on its own stream derived from (seed, i), so the result is identical
// for any thread count; ties between iterations go to the earlier one.
GreedyResult alpha_greedy(const Hypergraph& h, std::int64_t iterations,
                          std::uint64_t seed, int threads = 0);

struct BipartiteGraph {
  int n1 = 0, n2 = 0;
  // adjacency[v] = ascending right-side neighbors of left vertex v
  std::vector<std::vector<int>> adjacency;
};

struct DrcParams {
  int t = 1, r = 1, m = 1, a = 1;
};

// Left side of the guarantee: n1*(d1/n2)^t - C(n1,r)*(m/n2)^t - a, where
// d1 is the average left degree. The sampling argument applies exactly when
// this is nonnegative.
double drc_margin(const BipartiteGraph& g, const DrcParams& p);

struct DrcResult {
  bool found = false;
  std::vector<int> u;  // left vertices, ascending
  int tries = 0;
};

// Dependent random choice, Las-Vegas: sample t right vertices with
// repetition, take the common neighborhood A, then sweep the r-subsets of A
// in lexicographic order and delete the largest member of any surviving
// subset with fewer than m common right-neighbors. Succeeds when at least a
// vertices remain; both postconditions are re-verified before returning.
// Throws if the margin is negative; exhausting max_tries is a non-error
// outcome with found = false.
DrcResult drc_find(const BipartiteGraph& g, const DrcParams& p, int max_tries,
                   std::uint64_t seed);

// n^((r-s)/(r-1)) * (ln n)^(1/(r-1)), the lower-bound shape with its
// unspecified constant set to 1.
double bound_rs_lower(double n, int r, int s);

// 5.709^k, the 6-AP-free density bound at dimension k.
double bound_pp20(int k);

// 7*2^k - (sqrt(2)/(2-sqrt(3)))*3^(k/2), the 5-uniform construction's
// independence bound at 3^k vertices.
double bound_five_four(int k);

struct ProductBound {
  long long t = 1;
  double h = 1.0;
};

// t = ceil(ln(n1^(r1-1)*f/r1!) / ln g), clamped to at least 1, and
// h = (f/2)^(1/t); the product of an (n1,.)-system with alpha < n1/f and an
// (n2,.)-system with alpha < n2/g then has alpha < n1*n2/h.
ProductBound bound_product_h(int n1, int n2, int r1, double f, double g);

struct BoundReport {
  std::optional<double> rs_lower_shape;
  std::optional<double> pp20;
  std::optional<double> five_four_bound;
  std::optional<double> product_h;
  std::optional<long long> product_t;
  long long measured_alpha_lower = 0;
  std::optional<long long> measured_alpha_exact;
};

struct ProductBoundInputs {
  int n1 = 0, n2 = 0, r1 = 0;
  double f = 0.0, g = 0.0;
};

struct ReportOptions {
  std::uint64_t seed = 0;
  std::int64_t greedy_iterations = 100;
  std::int64_t exact_budget = 0;  // 0 skips the exact solver
  int threads = 0;
  std::optional<ProductBoundInputs> product;
};

// Runs the verifier, the greedy search, and optionally the exact solver,
// then assembles every applicable bound into the fixed JSON schema.
nlohmann::ordered_json report(const Hypergraph& h, const DesignParams& params,
                              const ReportOptions& opt);

}  // namespace nrs
