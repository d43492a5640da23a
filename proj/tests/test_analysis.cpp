#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrs/analysis.hpp"
#include "nrs/constructions.hpp"
#include "nrs/hypergraph.hpp"
#include "nrs/rng.hpp"
#include "oracles.hpp"

using nrs::Hypergraph;

TEST_CASE("exact solver on edgeless input") {
  const auto res = nrs::alpha_exact(Hypergraph(7, 3));
  CHECK(res.exact);
  CHECK(res.lower == 7);
  CHECK(res.upper == 7);
  CHECK(res.witness.size() == 7);
}

TEST_CASE("exact solver on the smallest progression systems") {
  const Hypergraph a61 = nrs::ap_system(6, 1);
  const auto r1 = nrs::alpha_exact(a61);
  CHECK(r1.exact);
  CHECK(r1.lower == 5);
  CHECK(oracle::alpha_enumerate(a61) == 5);

  const Hypergraph a32 = nrs::ap_system(3, 2);
  const auto r2 = nrs::alpha_exact(a32);
  CHECK(r2.exact);
  CHECK(r2.lower == 4);
  CHECK(oracle::alpha_enumerate(a32) == 4);
  CHECK(nrs::is_independent(a32, r2.witness).independent);
  CHECK((int)r2.witness.size() == 4);
}

TEST_CASE("exact solver agrees with full enumeration on random inputs") {
  nrs::Rng rng(271828);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 2 + (int)rng.below(3);
    const int n = r + 3 + (int)rng.below(20 - r - 2);
    const int m = 1 + (int)rng.below(25);
    const Hypergraph h = oracle::random_hypergraph(n, r, m, rng);
    const auto res = nrs::alpha_exact(h);
    CHECK(res.exact);
    CHECK(res.lower == res.upper);
    CHECK(res.lower == oracle::alpha_enumerate(h));
    CHECK((int)res.witness.size() == res.lower);
    CHECK(nrs::is_independent(h, res.witness).independent);
  }
}

TEST_CASE("exhausted budget certifies a sandwich") {
  const Hypergraph h = nrs::ap_system(6, 2);
  const auto full = nrs::alpha_exact(h);
  CHECK(full.exact);
  CHECK(full.lower == 25);

  const auto cut = nrs::alpha_exact(h, 1);
  CHECK(!cut.exact);
  CHECK(cut.lower <= 25);
  CHECK(cut.upper >= 25);
  CHECK(cut.lower <= cut.upper);
  CHECK((int)cut.witness.size() == cut.lower);
  CHECK(nrs::is_independent(h, cut.witness).independent);
}

TEST_CASE("greedy search basics") {
  CHECK(nrs::alpha_greedy(Hypergraph(6, 2), 5, 1).best == 6);
  const Hypergraph a32 = nrs::ap_system(3, 2);
  const auto res = nrs::alpha_greedy(a32, 100, 1);
  CHECK(res.best == 4);
  CHECK(nrs::is_independent(a32, res.witness).independent);
  CHECK((int)res.witness.size() == 4);
  CHECK_THROWS_AS(nrs::alpha_greedy(a32, 0, 1), std::invalid_argument);
}

TEST_CASE("greedy never beats the exact optimum") {
  nrs::Rng rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8 + (int)rng.below(10);
    const Hypergraph h = oracle::random_hypergraph(n, 3, 1 + (int)rng.below(20), rng);
    const int alpha = oracle::alpha_enumerate(h);
    const auto res = nrs::alpha_greedy(h, 30, 1000 + (std::uint64_t)trial);
    CHECK(res.best <= alpha);
    CHECK(nrs::is_independent(h, res.witness).independent);
    CHECK((int)res.witness.size() == res.best);
  }
}

TEST_CASE("greedy search is thread count independent") {
  const Hypergraph h = nrs::five_four(4);
  const auto a = nrs::alpha_greedy(h, 40, 9, 1);
  const auto b = nrs::alpha_greedy(h, 40, 9, 3);
  CHECK(a.best == b.best);
  CHECK(a.witness == b.witness);
}

TEST_CASE("sampling margin matches a direct recomputation") {
  nrs::BipartiteGraph g;
  g.n1 = 3;
  g.n2 = 4;
  g.adjacency = {{0, 1, 2, 3}, {0, 1}, {2}};
  const nrs::DrcParams p{2, 2, 1, 1};
  const double d1 = 7.0 / 3.0;
  const double want = 3.0 * std::pow(d1 / 4.0, 2) - 3.0 * std::pow(0.25, 2) - 1.0;
  CHECK(nrs::drc_margin(g, p) == doctest::Approx(want).epsilon(1e-12));
  CHECK_THROWS_AS(nrs::drc_find(g, p, 10, 1), std::invalid_argument);
}

TEST_CASE("dependent random choice on a complete bipartite graph") {
  nrs::BipartiteGraph g;
  g.n1 = 6;
  g.n2 = 8;
  for (int v = 0; v < g.n1; ++v)
    g.adjacency.push_back({0, 1, 2, 3, 4, 5, 6, 7});
  const nrs::DrcParams p{3, 3, 1, 5};
  CHECK(nrs::drc_margin(g, p) > 0.0);
  const auto res = nrs::drc_find(g, p, 10, 42);
  CHECK(res.found);
  CHECK(res.tries == 1);
  CHECK(res.u.size() == 6);
}

TEST_CASE("dependent random choice rejects a bad margin from low degree") {
  nrs::BipartiteGraph g;
  g.n1 = 2;
  g.n2 = 2;
  g.adjacency = {{}, {0, 1}};
  CHECK(nrs::drc_margin(g, nrs::DrcParams{1, 2, 1, 1}) < 0.0);
  CHECK_THROWS_AS(nrs::drc_find(g, nrs::DrcParams{1, 2, 1, 1}, 5, 0),
                  std::invalid_argument);
}

static bool subset_has_common(const nrs::BipartiteGraph& g,
                              const std::vector<int>& verts, int m) {
  std::set<int> common(g.adjacency[(std::size_t)verts[0]].begin(),
                       g.adjacency[(std::size_t)verts[0]].end());
  for (std::size_t i = 1; i < verts.size(); ++i) {
    std::set<int> next;
    for (int u : g.adjacency[(std::size_t)verts[i]])
      if (common.count(u)) next.insert(u);
    common.swap(next);
  }
  return (int)common.size() >= m;
}

TEST_CASE("dependent random choice postconditions on random graphs") {
  nrs::Rng rng(777);
  int found_count = 0;
  for (int inst = 0; inst < 12; ++inst) {
    nrs::BipartiteGraph g;
    g.n1 = 8 + (int)rng.below(4);
    g.n2 = 10 + (int)rng.below(5);
    g.adjacency.resize((std::size_t)g.n1);
    for (int v = 0; v < g.n1; ++v)
      for (int u = 0; u < g.n2; ++u)
        if (rng.below(10) < 8) g.adjacency[(std::size_t)v].push_back(u);
    const nrs::DrcParams p{2, 3, 2, 2};
    if (nrs::drc_margin(g, p) < 0.0) continue;
    const auto res = nrs::drc_find(g, p, 40, 12345 + (std::uint64_t)inst);
    const auto res2 = nrs::drc_find(g, p, 40, 12345 + (std::uint64_t)inst);
    CHECK(res.found == res2.found);
    CHECK(res.u == res2.u);
    CHECK(res.tries == res2.tries);
    if (!res.found) continue;
    ++found_count;
    CHECK((int)res.u.size() >= p.a);
    CHECK(std::is_sorted(res.u.begin(), res.u.end()));
    if ((int)res.u.size() >= p.r) {
      std::vector<bool> sel((std::size_t)res.u.size(), false);
      std::fill(sel.begin(), sel.begin() + p.r, true);
      do {
        std::vector<int> verts;
        for (std::size_t i = 0; i < sel.size(); ++i)
          if (sel[i]) verts.push_back(res.u[i]);
        CHECK(subset_has_common(g, verts, p.m));
      } while (std::prev_permutation(sel.begin(), sel.end()));
    }
  }
  CHECK(found_count >= 1);
}

TEST_CASE("independence lower bound shape") {
  const double e2 = std::exp(2.0);
  CHECK(nrs::bound_rs_lower(e2, 3, 2) ==
        doctest::Approx(std::exp(1.0) * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(nrs::bound_rs_lower(100, 3, 2) == doctest::Approx(21.4597).epsilon(1e-4));
  // exponent (r-s)/(r-1) at r=6, s=2 is 0.8
  const double n = 50.0;
  CHECK(nrs::bound_rs_lower(n, 6, 2) ==
        doctest::Approx(std::pow(n, 0.8) * std::pow(std::log(n), 0.2)).epsilon(1e-12));
  CHECK_THROWS_AS(nrs::bound_rs_lower(std::exp(1.0), 3, 2), std::domain_error);
  CHECK_THROWS_AS(nrs::bound_rs_lower(100, 3, 1), std::domain_error);
  CHECK_THROWS_AS(nrs::bound_rs_lower(100, 2, 2), std::domain_error);
  CHECK_THROWS_AS(nrs::bound_rs_lower(5, 6, 2), std::domain_error);
}

TEST_CASE("six power density bound") {
  CHECK(nrs::bound_pp20(1) == doctest::Approx(5.709));
  CHECK(nrs::bound_pp20(2) == doctest::Approx(32.592681).epsilon(1e-9));
  CHECK_THROWS_AS(nrs::bound_pp20(0), std::domain_error);
}

TEST_CASE("triple power independence bound values") {
  CHECK(nrs::bound_five_four(4) == doctest::Approx(64.4987482).epsilon(1e-8));
  CHECK(nrs::bound_five_four(3) == doctest::Approx(28.575).epsilon(1e-3));
  CHECK(nrs::bound_five_four(3) >= 27.0);
  CHECK_THROWS_AS(nrs::bound_five_four(0), std::domain_error);
}

TEST_CASE("triple power bound satisfies its doubling recurrence") {
  for (int k = 1; k <= 20; ++k) {
    const double lhs = nrs::bound_five_four(k + 1);
    const double rhs =
        2.0 * nrs::bound_five_four(k) + std::sqrt(2.0) * std::pow(3.0, k / 2.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("product bound exponent and base") {
  const auto pb = nrs::bound_product_h(36, 36, 3, 4.0, 4.0);
  const double num =
      2.0 * std::log(36.0) + std::log(4.0) - std::lgamma(4.0);
  CHECK(pb.t == (long long)std::ceil(num / std::log(4.0)));
  CHECK(pb.h == doctest::Approx(std::pow(2.0, 1.0 / (double)pb.t)).epsilon(1e-12));
  // clamp: tiny n1 with a large factorial pushes the raw value below 1
  const auto clamped = nrs::bound_product_h(2, 10, 5, 1.5, 3.0);
  CHECK(clamped.t == 1);
  CHECK(clamped.h == doctest::Approx(0.75).epsilon(1e-12));
  CHECK_THROWS_AS(nrs::bound_product_h(10, 10, 3, 1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(nrs::bound_product_h(10, 10, 3, 2.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(nrs::bound_product_h(0, 10, 3, 2.0, 2.0), std::domain_error);
}

static std::vector<std::string> key_sequence(const nlohmann::ordered_json& j) {
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  return keys;
}

TEST_CASE("report schema keys and order") {
  const Hypergraph h = nrs::ap_system(3, 2);
  nrs::ReportOptions opt;
  opt.seed = 11;
  opt.greedy_iterations = 50;
  opt.exact_budget = 1000000;
  const auto j = nrs::report(h, nrs::DesignParams(9, 3, 2), opt);

  CHECK(key_sequence(j) ==
        std::vector<std::string>{"n", "r", "s", "edges", "verified", "witness",
                                 "alpha_greedy", "alpha_exact", "alpha_exact_status",
                                 "bounds", "provenance", "seed"});
  CHECK(key_sequence(j["bounds"]) ==
        std::vector<std::string>{"rs_lower_shape", "pp20", "five_four", "product_h",
                                 "product_t"});
  CHECK(j["n"] == 9);
  CHECK(j["r"] == 3);
  CHECK(j["s"] == 2);
  CHECK(j["edges"] == 12);
  CHECK(j["verified"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j["alpha_exact"] == 4);
  CHECK(j["alpha_exact_status"] == "exact");
  CHECK(j["alpha_greedy"].get<int>() <= 4);
  CHECK(!j["bounds"]["rs_lower_shape"].is_null());
  CHECK(j["bounds"]["pp20"].is_null());
  CHECK(j["bounds"]["five_four"].is_null());
  CHECK(j["bounds"]["product_h"].is_null());
  CHECK(j["bounds"]["product_t"].is_null());
  CHECK(j["provenance"].is_null());
  CHECK(j["seed"] == 11);
}

TEST_CASE("report on a failing input carries the witness pair") {
  const Hypergraph h = nrs::ap_system(6, 2);
  nrs::ReportOptions opt;
  opt.seed = 3;
  const auto j = nrs::report(h, nrs::DesignParams(36, 6, 2), opt);
  CHECK(j["verified"] == false);
  REQUIRE(j["witness"].is_array());
  CHECK(j["witness"].size() == 2);
  const auto vr = nrs::verify_design(h, 2);
  CHECK(j["witness"][0].get<std::int64_t>() == vr.edge_a);
  CHECK(j["witness"][1].get<std::int64_t>() == vr.edge_b);
  // n = 6^2 and r = 6, so the density bound applies
  CHECK(j["bounds"]["pp20"].get<double>() == doctest::Approx(32.592681));
  CHECK(j["alpha_exact"].is_null());
  CHECK(j["alpha_exact_status"] == "skipped");
}

TEST_CASE("report certifies bounds when the budget runs out") {
  const Hypergraph h = nrs::ap_system(6, 2);
  nrs::ReportOptions opt;
  opt.seed = 3;
  opt.exact_budget = 1;
  const auto j = nrs::report(h, nrs::DesignParams(36, 6, 2), opt);
  CHECK(j["alpha_exact_status"] == "bounds");
  REQUIRE(j["alpha_exact"].is_array());
  CHECK(j["alpha_exact"][0].get<int>() <= 25);
  CHECK(j["alpha_exact"][1].get<int>() >= 25);
}

TEST_CASE("report serializes the construction history") {
  const nrs::BuildResult b = nrs::build_rs_system(50, 3, 2);
  nrs::ReportOptions opt;
  opt.seed = 1;
  const auto j = nrs::report(b.h, b.params, opt);
  const auto& prov = j["provenance"];
  REQUIRE(prov.is_object());
  CHECK(prov["op"] == "trim");
  CHECK(prov["keep"] == 50);
  const auto& sh = prov["children"][0];
  CHECK(sh["op"] == "shadow");
  CHECK(sh["r_prime"] == 3);
  const auto& ap = sh["children"][0];
  CHECK(ap["op"] == "ap_system");
  CHECK(ap["modulus"] == 6);
  CHECK(ap["dimension"] == 3);
  CHECK(ap["children"].empty());
}

TEST_CASE("report includes the product bound only when inputs are given") {
  const Hypergraph h = nrs::ap_system(3, 2);
  nrs::ReportOptions opt;
  opt.seed = 2;
  opt.product = nrs::ProductBoundInputs{36, 36, 3, 4.0, 4.0};
  const auto j = nrs::report(h, nrs::DesignParams(9, 3, 2), opt);
  const auto pb = nrs::bound_product_h(36, 36, 3, 4.0, 4.0);
  CHECK(j["bounds"]["product_h"].get<double>() == doctest::Approx(pb.h));
  CHECK(j["bounds"]["product_t"].get<long long>() == pb.t);
}
