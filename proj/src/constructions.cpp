#include "nrs/constructions.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nrs/zvec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nrs {

namespace {

std::int64_t ipow(int base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > std::numeric_limits<int>::max())
      throw std::invalid_argument("power overflows the vertex id range");
  }
  return v;
}

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

}  // namespace

Hypergraph ap_system(int r, int k) {
  if (r < 3) throw std::invalid_argument("ap_system: modulus must be >= 3");
  if (k < 1) throw std::invalid_argument("ap_system: dimension must be >= 1");
  const std::int64_t n64 = ipow(r, k);
  const int n = (int)n64;

  // One generator per cyclic subgroup: keep d only if its id is least among
  // the unit multiples c*d, so each progression set is produced once (per
  // base point filter below).
  std::vector<std::vector<int>> gens;
  for (std::int64_t id = 1; id < n; ++id) {
    ZVector d = id_to_vector(id, r, k);
    if (additive_order(d) != r) continue;
    bool least = true;
    for (int c = 2; c < r && least; ++c) {
      if (std::gcd(c, r) != 1) continue;
      if (vector_to_id((long long)c * d) < id) least = false;
    }
    if (least) gens.push_back(d.coords());
  }
  if ((std::int64_t)gens.size() * n > 200'000'000)
    throw std::invalid_argument("ap_system: r^k too large");

  std::vector<int> flat;
  std::vector<int> v((std::size_t)k);
  std::vector<int> edge((std::size_t)r);
  for (const auto& d : gens) {
    for (int a = 0; a < n; ++a) {
      std::int64_t rest = a;
      for (int i = k - 1; i >= 0; --i) {
        v[(std::size_t)i] = (int)(rest % r);
        rest /= r;
      }
      // Walk the progression; keep it only when a is its least element,
      // which makes each coset appear exactly once.
      bool least_base = true;
      for (int i = 0; i < r; ++i) {
        std::int64_t id = 0;
        for (int j = 0; j < k; ++j) id = id * r + v[(std::size_t)j];
        if (id < a) {
          least_base = false;
          break;
        }
        edge[(std::size_t)i] = (int)id;
        for (int j = 0; j < k; ++j)
          v[(std::size_t)j] = (v[(std::size_t)j] + d[(std::size_t)j]) % r;
      }
      if (least_base) flat.insert(flat.end(), edge.begin(), edge.end());
    }
  }
  return Hypergraph(n, r, std::move(flat));
}

FiveFourLevel make_five_four_level(int k) {
  if (k < 1 || k > 18)
    throw std::invalid_argument("make_five_four_level: level out of range");
  const int n = (int)ipow(3, k);
  const int ell = (int)std::bit_width((unsigned)(n - 1));
  FiveFourLevel lvl{k, n, ell, GF2Field(ell), {}};
  lvl.psi.resize((std::size_t)n);
  for (int j = 0; j < n; ++j) lvl.psi[(std::size_t)j] = (std::uint32_t)(j + 1);
  return lvl;
}

std::vector<int> five_four_cross(const FiveFourLevel& lvl, int threads) {
  const int n = lvl.copy_size;
  const GF2Field& f = lvl.field;
  const int nt = resolve_threads(threads);
  std::vector<std::vector<int>> slab((std::size_t)n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
  for (int a = 0; a < n; ++a) {
    auto& out = slab[(std::size_t)a];
    for (int a2 = a + 1; a2 < n; ++a2) {
      const GFElem num = f.element(lvl.psi[(std::size_t)a] ^ lvl.psi[(std::size_t)a2]);
      for (int b = 0; b < n; ++b) {
        for (int b2 = b + 1; b2 < n; ++b2) {
          const std::uint32_t den = lvl.psi[(std::size_t)b] ^ lvl.psi[(std::size_t)b2];
          const std::uint32_t c = f.div(num, f.element(den)).bits;
          if (c == 0)
            throw std::logic_error("five_four_cross: zero ratio from distinct vertices");
          if (c <= (std::uint32_t)n) {
            out.push_back(a);
            out.push_back(a2);
            out.push_back(n + b);
            out.push_back(n + b2);
            out.push_back(2 * n + (int)c - 1);
          }
        }
      }
    }
  }
  (void)nt;
  std::size_t total = 0;
  for (const auto& s : slab) total += s.size();
  std::vector<int> flat;
  flat.reserve(total);
  for (const auto& s : slab) flat.insert(flat.end(), s.begin(), s.end());
  return flat;
}

Hypergraph five_four(int k, int threads) {
  if (k < 1 || k > 6)
    throw std::invalid_argument("five_four: k must be in [1, 6]");
  const int n = (int)ipow(3, k);
  if (k <= 3) return Hypergraph(n, 5);
  Hypergraph prev = five_four(k - 1, threads);
  FiveFourLevel lvl = make_five_four_level(k - 1);
  const int np = lvl.copy_size;
  std::vector<int> cross = five_four_cross(lvl, threads);
  std::vector<int> flat;
  flat.reserve(prev.flat().size() * 3 + cross.size());
  for (int c = 0; c < 3; ++c)
    for (int v : prev.flat()) flat.push_back(c * np + v);
  flat.insert(flat.end(), cross.begin(), cross.end());
  return Hypergraph(n, 5, std::move(flat));
}

namespace {

int max_power_dividing(long long v, int b) {
  int e = 0;
  while (v % b == 0) {
    v /= b;
    ++e;
  }
  return e;
}

long long divide_out(long long v, int b, int e) {
  for (int i = 0; i < e; ++i) v /= b;
  return v;
}

}  // namespace

SExponents decompose_s(int s) {
  if (s < 2) throw std::invalid_argument("decompose_s: s must be >= 2");
  const long long t = (long long)s - 1;
  for (int l1 = max_power_dividing(t, 3); l1 >= 0; --l1) {
    const long long r1 = divide_out(t, 3, l1);
    for (int l2 = max_power_dividing(r1, 4); l2 >= 0; --l2) {
      const long long r2 = divide_out(r1, 4, l2);
      for (int l3 = max_power_dividing(r2, 5); l3 >= 0; --l3) {
        long long r3 = divide_out(r2, 5, l3);
        int l4 = 0;
        while (r3 % 6 == 0) {
          r3 /= 6;
          ++l4;
        }
        if (r3 == 1) return {l1, l2, l3, l4};
      }
    }
  }
  throw std::invalid_argument("decompose_s: s - 1 = " + std::to_string(t) +
                              " has no factorization into 3, 4, 5, 6");
}

int capacity(const SExponents& e) {
  if (e.l1 < 0 || e.l2 < 0 || e.l3 < 0 || e.l4 < 0)
    throw std::invalid_argument("capacity: negative exponent");
  long long sm1 = 1;
  for (int i = 0; i < e.l1; ++i) sm1 *= 3;
  for (int i = 0; i < e.l2; ++i) sm1 *= 4;
  for (int i = 0; i < e.l3; ++i) sm1 *= 5;
  for (int i = 0; i < e.l4; ++i) sm1 *= 6;
  const int f = e.l1 ? 3 : e.l2 ? 4 : e.l3 ? 5 : 6;
  const long long cap = f * sm1;
  if (cap > std::numeric_limits<int>::max())
    throw std::invalid_argument("capacity: overflow");
  return (int)cap;
}

BuildResult build_rs_system(int n, int r, int s) {
  const SExponents ex = decompose_s(s);
  if (n < r)
    throw std::invalid_argument("build_rs_system: need n >= r");

  if (s == 2) {
    if (r < 3 || r > 6)
      throw std::invalid_argument("build_rs_system: strength 2 supports uniformity 3..6");
    int k = 1;
    long long p = 6;
    while (p < n) {
      p *= 6;
      ++k;
    }
    Hypergraph base = ap_system(6, k);
    Provenance pa{Provenance::Kind::ApSystem, base.vertex_count(), 6, 2, 6, k, {}};
    Hypergraph sh = shadow(base, r);
    Provenance ps{Provenance::Kind::Shadow, sh.vertex_count(), r, 2, r, 0, {std::move(pa)}};
    Hypergraph tr = trim(sh, n);
    Provenance pt{Provenance::Kind::Trim, n, r, 2, n, 0, {std::move(ps)}};
    return {std::move(tr), DesignParams(n, r, 2, std::move(pt))};
  }

  const int cap = capacity(ex);
  if (r < 2 * s || r > cap)
    throw std::invalid_argument("build_rs_system: uniformity must be in [" +
                                std::to_string(2 * s) + ", " + std::to_string(cap) +
                                "] for this strength");
  const int f = ex.l1 ? 3 : ex.l2 ? 4 : ex.l3 ? 5 : 6;
  const int s1 = (s - 1) / f + 1;
  int m = 1;
  while ((long long)m * m < n) ++m;

  BuildResult h1 = build_rs_system(m, f * (s1 - 1), s1);
  BuildResult h2 = build_rs_system(m, f, 2);
  Hypergraph prod = product(h1.h, h2.h);
  Provenance pp{Provenance::Kind::Product,
                prod.vertex_count(),
                prod.arity(),
                s,
                0,
                0,
                {std::move(*h1.params.provenance), std::move(*h2.params.provenance)}};
  Hypergraph sh = shadow(prod, r);
  Provenance ps{Provenance::Kind::Shadow, sh.vertex_count(), r, s, r, 0, {std::move(pp)}};
  Hypergraph tr = trim(sh, n);
  Provenance pt{Provenance::Kind::Trim, n, r, s, n, 0, {std::move(ps)}};
  return {std::move(tr), DesignParams(n, r, s, std::move(pt))};
}

}  // namespace nrs
