#include "nrs/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "nrs/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nrs {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

template <int W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[(std::size_t)(i >> 6)] |= 1ull << (i & 63); }
  void reset(int i) { w[(std::size_t)(i >> 6)] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[(std::size_t)(i >> 6)] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Mask or_with(const Mask& o) const {
    Mask r;
    for (int i = 0; i < W; ++i) r.w[(std::size_t)i] = w[(std::size_t)i] | o.w[(std::size_t)i];
    return r;
  }
};

// Incidence structure shared by the searches: edge vertex lists plus a
// vertex-to-incident-edges CSR.
struct Incidence {
  int n = 0, r = 0;
  std::int64_t m = 0;
  const int* edges = nullptr;
  std::vector<std::int64_t> start;  // n + 1
  std::vector<std::int64_t> inc;    // m * r edge indices

  explicit Incidence(const Hypergraph& h)
      : n(h.vertex_count()), r(h.arity()), m(h.edge_count()), edges(h.flat().data()) {
    start.assign((std::size_t)n + 1, 0);
    for (std::int64_t i = 0; i < m * r; ++i) ++start[(std::size_t)edges[i] + 1];
    for (int v = 0; v < n; ++v) start[(std::size_t)v + 1] += start[(std::size_t)v];
    inc.resize((std::size_t)(m * r));
    std::vector<std::int64_t> fill(start.begin(), start.end() - 1);
    for (std::int64_t e = 0; e < m; ++e)
      for (int j = 0; j < r; ++j)
        inc[(std::size_t)fill[(std::size_t)edges[e * r + j]]++] = e;
  }
};

template <int W>
struct ExactSolver {
  const Incidence& g;
  std::int64_t budget;

  Mask<W> chosen, avail;
  std::vector<int> cnt;   // chosen vertices per edge
  std::vector<char> sat;  // edge already has an excluded vertex
  std::vector<int> deg;   // live edges per vertex

  int best = 0;
  Mask<W> best_mask;
  std::int64_t nodes = 0;
  bool aborted = false;
  int frontier_ub = 0;

  ExactSolver(const Incidence& g_, std::int64_t budget_) : g(g_), budget(budget_) {
    cnt.assign((std::size_t)g.m, 0);
    sat.assign((std::size_t)g.m, 0);
    deg.assign((std::size_t)g.n, 0);
    for (int v = 0; v < g.n; ++v) {
      avail.set(v);
      deg[(std::size_t)v] = (int)(g.start[(std::size_t)v + 1] - g.start[(std::size_t)v]);
    }
  }

  void exclude(int v, std::vector<std::int64_t>& satisfied) {
    avail.reset(v);
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i) {
      const std::int64_t e = g.inc[(std::size_t)i];
      if (sat[(std::size_t)e]) continue;
      sat[(std::size_t)e] = 1;
      satisfied.push_back(e);
      for (int j = 0; j < g.r; ++j) --deg[(std::size_t)g.edges[e * g.r + j]];
    }
  }

  void undo_exclude(int v, const std::vector<std::int64_t>& satisfied) {
    avail.set(v);
    for (std::int64_t e : satisfied) {
      sat[(std::size_t)e] = 0;
      for (int j = 0; j < g.r; ++j) ++deg[(std::size_t)g.edges[e * g.r + j]];
    }
  }

  int unchosen_vertex(std::int64_t e) const {
    for (int j = 0; j < g.r; ++j) {
      const int u = g.edges[e * g.r + j];
      if (!chosen.test(u)) return u;
    }
    return -1;
  }

  // chosen + available minus a greedy packing of vertex-disjoint live edges
  // (each such edge forces at least one exclusion of its own).
  int bound() const {
    int base = chosen.count() + avail.count();
    if (base <= best) return base;
    Mask<W> used;
    int packed = 0;
    for (std::int64_t e = 0; e < g.m; ++e) {
      if (sat[(std::size_t)e]) continue;
      bool disjoint = true;
      for (int j = 0; j < g.r && disjoint; ++j) {
        const int u = g.edges[e * g.r + j];
        if (!chosen.test(u) && used.test(u)) disjoint = false;
      }
      if (!disjoint) continue;
      for (int j = 0; j < g.r; ++j) {
        const int u = g.edges[e * g.r + j];
        if (!chosen.test(u)) used.set(u);
      }
      ++packed;
    }
    return base - packed;
  }

  int pick() const {
    int v = -1, d = 0;
    for (int word = 0; word < W; ++word) {
      std::uint64_t bits = avail.w[(std::size_t)word];
      while (bits) {
        const int u = word * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (deg[(std::size_t)u] > d) {
          d = deg[(std::size_t)u];
          v = u;
        }
      }
    }
    return v;
  }

  void dfs() {
    if (aborted) {
      frontier_ub = std::max(frontier_ub, bound());
      return;
    }
    if (++nodes > budget) {
      aborted = true;
      frontier_ub = std::max(frontier_ub, bound());
      return;
    }
    const int ub = bound();
    if (ub <= best) return;
    const int v = pick();
    if (v < 0) {  // no live edge: everything left fits
      best = ub;
      best_mask = chosen.or_with(avail);
      return;
    }

    // include v, then force out the last free vertex of any edge this fills
    // to r - 1 chosen
    chosen.set(v);
    avail.reset(v);
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i)
      ++cnt[(std::size_t)g.inc[(std::size_t)i]];
    std::vector<int> forced;
    std::vector<std::vector<std::int64_t>> forced_sat;
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i) {
      const std::int64_t e = g.inc[(std::size_t)i];
      if (sat[(std::size_t)e] || cnt[(std::size_t)e] != g.r - 1) continue;
      const int u = unchosen_vertex(e);
      forced.push_back(u);
      forced_sat.emplace_back();
      exclude(u, forced_sat.back());
    }
    dfs();
    for (std::size_t i = forced.size(); i-- > 0;)
      undo_exclude(forced[i], forced_sat[i]);
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i)
      --cnt[(std::size_t)g.inc[(std::size_t)i]];
    chosen.reset(v);
    avail.set(v);

    std::vector<std::int64_t> satisfied;
    exclude(v, satisfied);
    dfs();
    undo_exclude(v, satisfied);
  }

  AlphaResult run() {
    // warm start: first-fit in id order
    {
      std::vector<int> c((std::size_t)g.m, 0);
      Mask<W> s;
      int size = 0;
      for (int v = 0; v < g.n; ++v) {
        bool ok = true;
        for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1] && ok; ++i)
          if (c[(std::size_t)g.inc[(std::size_t)i]] == g.r - 1) ok = false;
        if (!ok) continue;
        s.set(v);
        ++size;
        for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i)
          ++c[(std::size_t)g.inc[(std::size_t)i]];
      }
      best = size;
      best_mask = s;
    }

    // arity-1 edges pin their vertex out before any branching
    std::vector<int> rooted;
    std::vector<std::vector<std::int64_t>> rooted_sat;
    for (std::int64_t e = 0; e < g.m; ++e) {
      if (sat[(std::size_t)e] || cnt[(std::size_t)e] != g.r - 1) continue;
      const int u = unchosen_vertex(e);
      if (!avail.test(u)) continue;
      rooted.push_back(u);
      rooted_sat.emplace_back();
      exclude(u, rooted_sat.back());
    }
    (void)rooted;

    dfs();

    AlphaResult res;
    res.lower = best;
    res.upper = aborted ? std::max(best, frontier_ub) : best;
    res.exact = !aborted;
    res.nodes = nodes;
    for (int v = 0; v < g.n; ++v)
      if (best_mask.test(v)) res.witness.push_back(v);
    return res;
  }
};

template <int W>
AlphaResult solve_exact(const Hypergraph& h, std::int64_t budget) {
  Incidence g(h);
  ExactSolver<W> s(g, budget);
  return s.run();
}

}  // namespace

AlphaResult alpha_exact(const Hypergraph& h, std::int64_t budget) {
  const int n = h.vertex_count();
  if (h.edge_count() == 0) {
    AlphaResult res;
    res.lower = res.upper = n;
    res.exact = true;
    res.witness.resize((std::size_t)n);
    for (int v = 0; v < n; ++v) res.witness[(std::size_t)v] = v;
    return res;
  }
  if (budget < 1) budget = 1;
  if (n <= 64) return solve_exact<1>(h, budget);
  if (n <= 128) return solve_exact<2>(h, budget);
  if (n <= 256) return solve_exact<4>(h, budget);
  if (n <= 512) return solve_exact<8>(h, budget);
  if (n <= 1024) return solve_exact<16>(h, budget);
  if (n <= 2048) return solve_exact<32>(h, budget);

  // too wide to search: report the first-fit set against the trivial bound
  Incidence g(h);
  std::vector<int> c((std::size_t)g.m, 0);
  AlphaResult res;
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1] && ok; ++i)
      if (c[(std::size_t)g.inc[(std::size_t)i]] == g.r - 1) ok = false;
    if (!ok) continue;
    res.witness.push_back(v);
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i)
      ++c[(std::size_t)g.inc[(std::size_t)i]];
  }
  res.lower = (int)res.witness.size();
  res.upper = n;
  res.exact = false;
  return res;
}

namespace {

// One worker's reusable state for the randomized greedy search.
struct GreedyState {
  const Incidence& g;
  std::vector<char> chosen;
  std::vector<int> blocked;    // how many edges currently pin this vertex out
  std::vector<int> cnt;        // chosen vertices per edge
  std::vector<char> forbidden; // vertex sits in an arity-1 edge
  std::vector<int> s;          // current set
  std::vector<int> perm;

  explicit GreedyState(const Incidence& g_) : g(g_) {
    chosen.assign((std::size_t)g.n, 0);
    blocked.assign((std::size_t)g.n, 0);
    cnt.assign((std::size_t)g.m, 0);
    forbidden.assign((std::size_t)g.n, 0);
    if (g.r == 1)
      for (std::int64_t e = 0; e < g.m; ++e) forbidden[(std::size_t)g.edges[e]] = 1;
    perm.resize((std::size_t)g.n);
  }

  bool addable(int v) const {
    return !chosen[(std::size_t)v] && blocked[(std::size_t)v] == 0 &&
           !forbidden[(std::size_t)v];
  }

  void add(int v) {
    chosen[(std::size_t)v] = 1;
    s.push_back(v);
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i) {
      const std::int64_t e = g.inc[(std::size_t)i];
      if (++cnt[(std::size_t)e] == g.r - 1) {
        for (int j = 0; j < g.r; ++j) {
          const int u = g.edges[e * g.r + j];
          if (!chosen[(std::size_t)u]) {
            ++blocked[(std::size_t)u];
            break;
          }
        }
      }
    }
  }

  void remove(int v) {
    for (std::int64_t i = g.start[(std::size_t)v]; i < g.start[(std::size_t)v + 1]; ++i) {
      const std::int64_t e = g.inc[(std::size_t)i];
      if (cnt[(std::size_t)e] == g.r - 1) {
        for (int j = 0; j < g.r; ++j) {
          const int u = g.edges[e * g.r + j];
          if (!chosen[(std::size_t)u]) {
            --blocked[(std::size_t)u];
            break;
          }
        }
      }
      --cnt[(std::size_t)e];
    }
    chosen[(std::size_t)v] = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == v) {
        s[i] = s.back();
        s.pop_back();
        break;
      }
  }

  // Adds every currently addable vertex in perm order; returns them.
  std::vector<int> fill() {
    std::vector<int> added;
    for (int v : perm)
      if (addable(v)) {
        add(v);
        added.push_back(v);
      }
    return added;
  }

  int run_iteration(std::uint64_t stream) {
    Rng rng(stream);
    for (int v = 0; v < g.n; ++v) perm[(std::size_t)v] = v;
    rng.shuffle(perm);
    std::fill(cnt.begin(), cnt.end(), 0);
    std::fill(chosen.begin(), chosen.end(), 0);
    std::fill(blocked.begin(), blocked.end(), 0);
    s.clear();
    fill();

    // bounded exchange: drop one vertex, refill, keep strict improvements
    for (int round = 0; round < 2; ++round) {
      bool improved = false;
      const int trials = (int)std::min<std::size_t>(4, s.size());
      for (int t = 0; t < trials && !improved; ++t) {
        const int before = (int)s.size();
        const int u = s[(std::size_t)rng.below(s.size())];
        remove(u);
        std::vector<int> added = fill();
        if ((int)s.size() > before) {
          improved = true;
        } else {
          for (int v : added) remove(v);
          add(u);
        }
      }
      if (!improved) break;
    }
    return (int)s.size();
  }
};

}  // namespace

GreedyResult alpha_greedy(const Hypergraph& h, std::int64_t iterations,
                          std::uint64_t seed, int threads) {
  if (iterations < 1)
    throw std::invalid_argument("alpha_greedy: iterations must be >= 1");
  const Incidence g(h);
  const int nt = resolve_threads(threads);

  int best_size = -1;
  std::int64_t best_iter = -1;
  std::vector<int> best_set;

#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
  {
    GreedyState st(g);
    int local_size = -1;
    std::int64_t local_iter = -1;
    std::vector<int> local_set;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t it = 0; it < iterations; ++it) {
      const int size = st.run_iteration(Rng::derive(seed, (std::uint64_t)it));
      if (size > local_size) {
        local_size = size;
        local_iter = it;
        local_set = st.s;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_size > best_size ||
          (local_size == best_size && local_iter < best_iter)) {
        best_size = local_size;
        best_iter = local_iter;
        best_set = std::move(local_set);
      }
    }
  }
  (void)nt;

  std::sort(best_set.begin(), best_set.end());
  return {best_size, std::move(best_set)};
}

namespace {

void validate_bipartite(const BipartiteGraph& g) {
  if (g.n1 < 1 || g.n2 < 1)
    throw std::invalid_argument("bipartite graph: sides must be nonempty");
  if ((int)g.adjacency.size() != g.n1)
    throw std::invalid_argument("bipartite graph: adjacency size != n1");
  for (const auto& nbrs : g.adjacency)
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] < 0 || nbrs[i] >= g.n2)
        throw std::invalid_argument("bipartite graph: neighbor id out of range");
      if (i > 0 && nbrs[i] <= nbrs[i - 1])
        throw std::invalid_argument("bipartite graph: neighbors must be ascending");
    }
}

void validate_drc_params(const DrcParams& p) {
  if (p.t < 1 || p.r < 1 || p.m < 1 || p.a < 1)
    throw std::invalid_argument("drc parameters must be positive");
}

double choose_double(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

struct ComboIter {
  int n, r;
  std::vector<int> c;
  ComboIter(int n_, int r_) : n(n_), r(r_), c((std::size_t)r_) {
    for (int i = 0; i < r; ++i) c[(std::size_t)i] = i;
  }
  bool next() {
    int i = r - 1;
    while (i >= 0 && c[(std::size_t)i] == n - r + i) --i;
    if (i < 0) return false;
    ++c[(std::size_t)i];
    for (int j = i + 1; j < r; ++j) c[(std::size_t)j] = c[(std::size_t)j - 1] + 1;
    return true;
  }
};

}  // namespace

double drc_margin(const BipartiteGraph& g, const DrcParams& p) {
  validate_bipartite(g);
  validate_drc_params(p);
  double total = 0.0;
  for (const auto& nbrs : g.adjacency) total += (double)nbrs.size();
  const double d1 = total / g.n1;
  const double x = g.n1 * std::pow(d1 / g.n2, p.t);
  const double y = choose_double(g.n1, p.r) * std::pow((double)p.m / g.n2, p.t);
  return x - y - p.a;
}

DrcResult drc_find(const BipartiteGraph& g, const DrcParams& p, int max_tries,
                   std::uint64_t seed) {
  if (drc_margin(g, p) < 0.0)
    throw std::invalid_argument("drc_find: expected-size guarantee does not hold");
  if (max_tries < 1)
    throw std::invalid_argument("drc_find: max_tries must be >= 1");

  const int words = (g.n2 + 63) / 64;
  std::vector<std::uint64_t> nbr((std::size_t)(g.n1 * words), 0);
  for (int v = 0; v < g.n1; ++v)
    for (int u : g.adjacency[(std::size_t)v])
      nbr[(std::size_t)(v * words + (u >> 6))] |= 1ull << (u & 63);

  std::vector<std::uint64_t> common((std::size_t)words);
  auto common_count = [&](const std::vector<int>& verts) {
    std::fill(common.begin(), common.end(), ~0ull);
    if (g.n2 & 63) common[(std::size_t)words - 1] = (1ull << (g.n2 & 63)) - 1;
    for (int v : verts)
      for (int w = 0; w < words; ++w)
        common[(std::size_t)w] &= nbr[(std::size_t)(v * words + w)];
    int c = 0;
    for (auto x : common) c += std::popcount(x);
    return c;
  };

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Rng rng(Rng::derive(seed, (std::uint64_t)attempt));
    std::vector<int> t((std::size_t)p.t);
    for (int i = 0; i < p.t; ++i) t[(std::size_t)i] = (int)rng.below((std::uint64_t)g.n2);

    std::vector<int> a;
    for (int v = 0; v < g.n1; ++v) {
      bool all = true;
      for (int z : t)
        if (!((nbr[(std::size_t)(v * words + (z >> 6))] >> (z & 63)) & 1)) {
          all = false;
          break;
        }
      if (all) a.push_back(v);
    }

    std::vector<char> removed(a.size(), 0);
    if ((int)a.size() >= p.r) {
      ComboIter it((int)a.size(), p.r);
      std::vector<int> verts((std::size_t)p.r);
      do {
        bool alive = true;
        for (int i = 0; i < p.r && alive; ++i)
          if (removed[(std::size_t)it.c[(std::size_t)i]]) alive = false;
        if (!alive) continue;
        for (int i = 0; i < p.r; ++i)
          verts[(std::size_t)i] = a[(std::size_t)it.c[(std::size_t)i]];
        if (common_count(verts) < p.m)
          removed[(std::size_t)it.c[(std::size_t)(p.r - 1)]] = 1;
      } while (it.next());
    }

    std::vector<int> u;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!removed[i]) u.push_back(a[i]);

    if ((int)u.size() < p.a) continue;

    // Las-Vegas: check both guarantees before trusting the sample.
    bool good = true;
    if ((int)u.size() >= p.r) {
      ComboIter it((int)u.size(), p.r);
      std::vector<int> verts((std::size_t)p.r);
      do {
        for (int i = 0; i < p.r; ++i)
          verts[(std::size_t)i] = u[(std::size_t)it.c[(std::size_t)i]];
        if (common_count(verts) < p.m) {
          good = false;
          break;
        }
      } while (it.next());
    }
    if (good) return {true, std::move(u), attempt + 1};
  }
  return {false, {}, max_tries};
}

double bound_rs_lower(double n, int r, int s) {
  if (s < 2 || r <= s || n < r || n < 3.0)
    throw std::domain_error("bound_rs_lower: need n >= r > s >= 2 and n >= 3");
  return std::pow(n, (double)(r - s) / (r - 1)) *
         std::pow(std::log(n), 1.0 / (r - 1));
}

double bound_pp20(int k) {
  if (k < 1) throw std::domain_error("bound_pp20: k must be >= 1");
  return std::pow(5.709, (double)k);
}

double bound_five_four(int k) {
  if (k < 1) throw std::domain_error("bound_five_four: k must be >= 1");
  return 7.0 * std::pow(2.0, (double)k) -
         (std::sqrt(2.0) / (2.0 - std::sqrt(3.0))) * std::pow(3.0, (double)k / 2.0);
}

ProductBound bound_product_h(int n1, int n2, int r1, double f, double g) {
  if (n1 < 1 || n2 < 1 || r1 < 1)
    throw std::domain_error("bound_product_h: sizes must be positive");
  if (f <= 1.0 || g <= 1.0)
    throw std::domain_error("bound_product_h: need f > 1 and g > 1");
  const double num = (r1 - 1) * std::log((double)n1) + std::log(f) -
                     std::lgamma((double)r1 + 1.0);
  long long t = (long long)std::ceil(num / std::log(g));
  if (t < 1) t = 1;
  return {t, std::pow(f / 2.0, 1.0 / (double)t)};
}

namespace {

bool power_index(int n, int base, int& k) {
  k = 0;
  long long v = 1;
  while (v < n) {
    v *= base;
    ++k;
  }
  return v == n && k >= 1;
}

const char* provenance_op(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::ApSystem: return "ap_system";
    case Provenance::Kind::FiveFour: return "five_four";
    case Provenance::Kind::Product: return "product";
    case Provenance::Kind::Shadow: return "shadow";
    case Provenance::Kind::Trim: return "trim";
  }
  return "unknown";
}

nlohmann::ordered_json provenance_json(const Provenance& p) {
  nlohmann::ordered_json j;
  j["op"] = provenance_op(p.kind);
  j["n"] = p.n;
  j["r"] = p.r;
  j["s"] = p.s;
  switch (p.kind) {
    case Provenance::Kind::ApSystem:
      j["modulus"] = p.p1;
      j["dimension"] = p.p2;
      break;
    case Provenance::Kind::FiveFour:
      j["k"] = p.p1;
      break;
    case Provenance::Kind::Shadow:
      j["r_prime"] = p.p1;
      break;
    case Provenance::Kind::Trim:
      j["keep"] = p.p1;
      break;
    case Provenance::Kind::Product:
      break;
  }
  auto children = nlohmann::ordered_json::array();
  for (const auto& c : p.children) children.push_back(provenance_json(c));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

nlohmann::ordered_json report(const Hypergraph& h, const DesignParams& params,
                              const ReportOptions& opt) {
  nlohmann::ordered_json j;
  j["n"] = params.n;
  j["r"] = params.r;
  j["s"] = params.s;
  j["edges"] = h.edge_count();

  const VerifyResult vr = verify_design(h, params.s, opt.threads);
  j["verified"] = vr.ok;
  if (vr.ok)
    j["witness"] = nullptr;
  else
    j["witness"] = nlohmann::ordered_json::array({vr.edge_a, vr.edge_b});

  BoundReport br;
  const GreedyResult gr = alpha_greedy(h, std::max<std::int64_t>(1, opt.greedy_iterations),
                                       opt.seed, opt.threads);
  br.measured_alpha_lower = gr.best;
  j["alpha_greedy"] = gr.best;

  if (opt.exact_budget > 0) {
    const AlphaResult ar = alpha_exact(h, opt.exact_budget);
    if (ar.exact) {
      br.measured_alpha_exact = ar.lower;
      j["alpha_exact"] = ar.lower;
      j["alpha_exact_status"] = "exact";
    } else {
      j["alpha_exact"] = nlohmann::ordered_json::array({ar.lower, ar.upper});
      j["alpha_exact_status"] = "bounds";
    }
  } else {
    j["alpha_exact"] = nullptr;
    j["alpha_exact_status"] = "skipped";
  }

  if (params.s >= 2 && params.n >= 3)
    br.rs_lower_shape = bound_rs_lower((double)params.n, params.r, params.s);
  int k = 0;
  if (params.r == 6 && power_index(params.n, 6, k)) br.pp20 = bound_pp20(k);
  if (params.r == 5 && power_index(params.n, 3, k))
    br.five_four_bound = bound_five_four(k);
  if (opt.product) {
    const ProductBound pb = bound_product_h(opt.product->n1, opt.product->n2,
                                            opt.product->r1, opt.product->f,
                                            opt.product->g);
    br.product_h = pb.h;
    br.product_t = pb.t;
  }

  nlohmann::ordered_json bounds;
  bounds["rs_lower_shape"] =
      br.rs_lower_shape ? nlohmann::ordered_json(*br.rs_lower_shape) : nullptr;
  bounds["pp20"] = br.pp20 ? nlohmann::ordered_json(*br.pp20) : nullptr;
  bounds["five_four"] =
      br.five_four_bound ? nlohmann::ordered_json(*br.five_four_bound) : nullptr;
  bounds["product_h"] =
      br.product_h ? nlohmann::ordered_json(*br.product_h) : nullptr;
  bounds["product_t"] =
      br.product_t ? nlohmann::ordered_json(*br.product_t) : nullptr;
  j["bounds"] = std::move(bounds);

  if (params.provenance)
    j["provenance"] = provenance_json(*params.provenance);
  else
    j["provenance"] = nullptr;
  j["seed"] = opt.seed;
  return j;
}

}  // namespace nrs
