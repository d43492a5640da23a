#include "nrs/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nrs {

namespace {

// Key extraction budget for subset hashing; beyond this the pairwise scan
// is cheaper on memory and still exact.
constexpr std::int64_t kKeyBudget = 400'000'000;

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

// C(r, s) with saturation at cap.
std::int64_t choose_capped(int r, int s, std::int64_t cap) {
  if (s < 0 || s > r) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= s; ++i) {
    c = c * (r - s + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool lex_less(const int* a, const int* b, int r) {
  for (int i = 0; i < r; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
  if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
  if (r < 1) throw std::invalid_argument("Hypergraph: arity must be >= 1");
}

Hypergraph::Hypergraph(int n, int r, std::vector<int> flat)
    : n_(n), r_(r), flat_(std::move(flat)) {
  if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
  if (r < 1) throw std::invalid_argument("Hypergraph: arity must be >= 1");
  canonicalize();
}

void Hypergraph::canonicalize() {
  if (flat_.size() % (std::size_t)r_ != 0)
    throw std::invalid_argument("Hypergraph: edge list length not a multiple of arity");
  const std::int64_t m = (std::int64_t)flat_.size() / r_;
  for (std::int64_t i = 0; i < m; ++i) {
    int* e = flat_.data() + i * r_;
    std::sort(e, e + r_);
    if (e[0] < 0 || e[r_ - 1] >= n_)
      throw std::invalid_argument("Hypergraph: vertex id out of range");
    for (int j = 1; j < r_; ++j)
      if (e[j] == e[j - 1])
        throw std::invalid_argument("Hypergraph: repeated id within an edge");
  }
  std::vector<std::int64_t> idx((std::size_t)m);
  std::iota(idx.begin(), idx.end(), 0);
  const int* base = flat_.data();
  const int r = r_;
  std::sort(idx.begin(), idx.end(), [base, r](std::int64_t a, std::int64_t b) {
    return lex_less(base + a * r, base + b * r, r);
  });
  std::vector<int> out;
  out.reserve(flat_.size());
  for (std::int64_t i = 0; i < m; ++i) {
    const int* e = base + idx[(std::size_t)i] * r;
    if (!out.empty() &&
        std::equal(e, e + r, out.data() + out.size() - (std::size_t)r))
      continue;
    out.insert(out.end(), e, e + r);
  }
  flat_ = std::move(out);
}

void Hypergraph::add_edge(std::span<const int> ids) {
  if ((int)ids.size() != r_)
    throw std::invalid_argument("add_edge: wrong arity");
  std::vector<int> e(ids.begin(), ids.end());
  std::sort(e.begin(), e.end());
  if (e.front() < 0 || e.back() >= n_)
    throw std::invalid_argument("add_edge: vertex id out of range");
  for (int j = 1; j < r_; ++j)
    if (e[(std::size_t)j] == e[(std::size_t)j - 1])
      throw std::invalid_argument("add_edge: repeated id within an edge");
  const std::int64_t m = edge_count();
  std::int64_t lo = 0, hi = m;
  while (lo < hi) {
    std::int64_t mid = (lo + hi) / 2;
    if (lex_less(flat_.data() + mid * r_, e.data(), r_))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < m && std::equal(e.begin(), e.end(), flat_.data() + lo * r_))
    return;  // already present
  flat_.insert(flat_.begin() + lo * r_, e.begin(), e.end());
}

bool Hypergraph::has_edge(std::span<const int> ids) const {
  if ((int)ids.size() != r_) return false;
  std::vector<int> key(ids.begin(), ids.end());
  std::sort(key.begin(), key.end());
  const std::int64_t m = edge_count();
  std::int64_t lo = 0, hi = m;
  while (lo < hi) {
    std::int64_t mid = (lo + hi) / 2;
    if (lex_less(flat_.data() + mid * r_, key.data(), r_))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < m && std::equal(key.begin(), key.end(), flat_.data() + lo * r_);
}

namespace {

// Visits the s-element index combinations of [0, r) in lexicographic order.
struct ComboIter {
  int r, s;
  std::vector<int> c;
  explicit ComboIter(int r_, int s_) : r(r_), s(s_), c((std::size_t)s_) {
    for (int i = 0; i < s; ++i) c[(std::size_t)i] = i;
  }
  bool next() {
    int i = s - 1;
    while (i >= 0 && c[(std::size_t)i] == r - s + i) --i;
    if (i < 0) return false;
    ++c[(std::size_t)i];
    for (int j = i + 1; j < s; ++j) c[(std::size_t)j] = c[(std::size_t)j - 1] + 1;
    return true;
  }
};

VerifyResult verify_packed(const Hypergraph& h, int s, std::int64_t per_edge,
                           int bits_n, int bits_m, int threads) {
  const std::int64_t m = h.edge_count();
  const int r = h.arity();
  std::vector<std::uint64_t> keys((std::size_t)(m * per_edge));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = h.edge(i);
    ComboIter it(r, s);
    std::uint64_t* out = keys.data() + i * per_edge;
    do {
      std::uint64_t key = 0;
      for (int j = 0; j < s; ++j)
        key = (key << bits_n) | (std::uint64_t)e[(std::size_t)it.c[(std::size_t)j]];
      *out++ = (key << bits_m) | (std::uint64_t)i;
    } while (it.next());
  }
  (void)threads;
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if ((keys[i] >> bits_m) == (keys[i - 1] >> bits_m)) {
      std::uint64_t mask = (bits_m >= 64) ? ~0ull : ((1ull << bits_m) - 1);
      return {false, (std::int64_t)(keys[i - 1] & mask),
              (std::int64_t)(keys[i] & mask)};
    }
  }
  return {};
}

VerifyResult verify_hashed(const Hypergraph& h, int s, std::int64_t per_edge,
                           int threads) {
  const std::int64_t m = h.edge_count();
  const int r = h.arity();
  struct Ent {
    std::uint64_t hash;
    std::uint32_t edge;
    std::uint32_t rank;
  };
  std::vector<Ent> ents((std::size_t)(m * per_edge));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = h.edge(i);
    ComboIter it(r, s);
    Ent* out = ents.data() + i * per_edge;
    std::uint32_t rank = 0;
    do {
      std::uint64_t hv = 0x9e3779b97f4a7c15ull;
      for (int j = 0; j < s; ++j)
        hv = mix64(hv ^ (std::uint64_t)e[(std::size_t)it.c[(std::size_t)j]]);
      *out++ = Ent{hv, (std::uint32_t)i, rank++};
    } while (it.next());
  }
  (void)threads;
  std::sort(ents.begin(), ents.end(), [](const Ent& a, const Ent& b) {
    if (a.hash != b.hash) return a.hash < b.hash;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.rank < b.rank;
  });
  auto subset_of = [&](const Ent& e, std::vector<int>& out) {
    ComboIter it(r, s);
    std::uint32_t k = 0;
    auto ed = h.edge(e.edge);
    do {
      if (k == e.rank) {
        out.clear();
        for (int j = 0; j < s; ++j)
          out.push_back(ed[(std::size_t)it.c[(std::size_t)j]]);
        return;
      }
      ++k;
    } while (it.next());
  };
  std::vector<int> sa, sb;
  for (std::size_t i = 0; i < ents.size();) {
    std::size_t j = i + 1;
    while (j < ents.size() && ents[j].hash == ents[i].hash) ++j;
    if (j - i > 1) {
      for (std::size_t a = i; a < j; ++a)
        for (std::size_t b = a + 1; b < j; ++b) {
          if (ents[a].edge == ents[b].edge) continue;
          subset_of(ents[a], sa);
          subset_of(ents[b], sb);
          if (sa == sb)
            return {false, (std::int64_t)ents[a].edge, (std::int64_t)ents[b].edge};
        }
    }
    i = j;
  }
  return {};
}

}  // namespace

VerifyResult verify_design_pairwise(const Hypergraph& h, int s) {
  if (s < 1 || s > h.arity())
    throw std::invalid_argument("verify_design: s must be in [1, r]");
  const std::int64_t m = h.edge_count();
  const int r = h.arity();
  for (std::int64_t i = 0; i < m; ++i) {
    auto a = h.edge(i);
    for (std::int64_t j = i + 1; j < m; ++j) {
      auto b = h.edge(j);
      int ia = 0, ib = 0, common = 0;
      while (ia < r && ib < r) {
        if (a[(std::size_t)ia] == b[(std::size_t)ib]) {
          if (++common >= s) return {false, i, j};
          ++ia;
          ++ib;
        } else if (a[(std::size_t)ia] < b[(std::size_t)ib]) {
          ++ia;
        } else {
          ++ib;
        }
      }
    }
  }
  return {};
}

VerifyResult verify_design(const Hypergraph& h, int s, int threads) {
  if (s < 1 || s > h.arity())
    throw std::invalid_argument("verify_design: s must be in [1, r]");
  const std::int64_t m = h.edge_count();
  if (m < 2) return {};
  const std::int64_t per_edge = choose_capped(h.arity(), s, kKeyBudget);
  if (per_edge > kKeyBudget / m) return verify_design_pairwise(h, s);
  const int t = resolve_threads(threads);
  int bits_n = std::max(1, (int)std::bit_width((std::uint64_t)std::max(h.vertex_count() - 1, 1)));
  int bits_m = std::max(1, (int)std::bit_width((std::uint64_t)(m - 1)));
  if (s * bits_n + bits_m <= 64)
    return verify_packed(h, s, per_edge, bits_n, bits_m, t);
  return verify_hashed(h, s, per_edge, t);
}

IndependenceResult is_independent(const Hypergraph& h, std::span<const int> s) {
  std::vector<char> in((std::size_t)h.vertex_count(), 0);
  for (int v : s) {
    if (v < 0 || v >= h.vertex_count())
      throw std::invalid_argument("is_independent: vertex id out of range");
    in[(std::size_t)v] = 1;
  }
  const std::int64_t m = h.edge_count();
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = h.edge(i);
    bool all = true;
    for (int v : e)
      if (!in[(std::size_t)v]) {
        all = false;
        break;
      }
    if (all) return {false, i};
  }
  return {};
}

Hypergraph induced(const Hypergraph& h, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= h.vertex_count()))
    throw std::invalid_argument("induced: vertex id out of range");
  std::vector<int> pos((std::size_t)h.vertex_count(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) pos[(std::size_t)s[i]] = (int)i;
  std::vector<int> flat;
  const std::int64_t m = h.edge_count();
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = h.edge(i);
    bool inside = true;
    for (int v : e)
      if (pos[(std::size_t)v] < 0) {
        inside = false;
        break;
      }
    if (!inside) continue;
    for (int v : e) flat.push_back(pos[(std::size_t)v]);
  }
  return Hypergraph((int)s.size(), h.arity(), std::move(flat));
}

Hypergraph shadow(const Hypergraph& h, int r_prime) {
  if (r_prime < 1 || r_prime > h.arity())
    throw std::invalid_argument("shadow: target arity must be in [1, r]");
  std::vector<int> flat;
  const std::int64_t m = h.edge_count();
  flat.reserve((std::size_t)(m * r_prime));
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = h.edge(i);
    flat.insert(flat.end(), e.begin(), e.begin() + r_prime);
  }
  return Hypergraph(h.vertex_count(), r_prime, std::move(flat));
}

Hypergraph product(const Hypergraph& a, const Hypergraph& b) {
  std::int64_t n = (std::int64_t)a.vertex_count() * b.vertex_count();
  if (n > std::numeric_limits<int>::max())
    throw std::invalid_argument("product: vertex count overflows");
  std::int64_t r = (std::int64_t)a.arity() * b.arity();
  std::int64_t cells = a.edge_count() * b.edge_count() * r;
  if (cells > (std::int64_t)1 << 31)
    throw std::invalid_argument("product: edge list too large");
  std::vector<int> flat;
  flat.reserve((std::size_t)cells);
  const int n2 = b.vertex_count();
  for (std::int64_t i = 0; i < a.edge_count(); ++i) {
    auto ea = a.edge(i);
    for (std::int64_t j = 0; j < b.edge_count(); ++j) {
      auto eb = b.edge(j);
      for (int u : ea)
        for (int v : eb) flat.push_back(u * n2 + v);
    }
  }
  return Hypergraph((int)n, (int)r, std::move(flat));
}

Hypergraph trim(const Hypergraph& h, int n) {
  if (n < 0 || n > h.vertex_count())
    throw std::invalid_argument("trim: target vertex count out of range");
  std::vector<int> flat;
  const std::int64_t m = h.edge_count();
  const int r = h.arity();
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = h.edge(i);
    if (e[(std::size_t)(r - 1)] < n) flat.insert(flat.end(), e.begin(), e.end());
  }
  return Hypergraph(n, r, std::move(flat));
}

DesignParams::DesignParams(int n_, int r_, int s_, std::optional<Provenance> prov)
    : n(n_), r(r_), s(s_), provenance(std::move(prov)) {
  if (!(n >= r && r > s && s >= 1))
    throw std::invalid_argument("DesignParams: need n >= r > s >= 1");
}

}  // namespace nrs
