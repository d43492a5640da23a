#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "nrs/analysis.hpp"
#include "nrs/constructions.hpp"
#include "nrs/hypergraph.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void check(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "MISMATCH: %s\n", what);
    ++failures;
  }
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds_since(t0);
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  std::printf("serial reference vs parallel kernels%s\n\n", quick ? " (quick)" : "");

  {
    const nrs::Hypergraph h = nrs::ap_system(6, quick ? 2 : 3);
    nrs::VerifyResult a, b, c;
    const double ts = timed([&] { a = nrs::verify_design(h, 2, 1); });
    const double tp = timed([&] { b = nrs::verify_design(h, 2, 0); });
    const double to = timed([&] { c = nrs::verify_design_pairwise(h, 2); });
    row("verify ap_system subset-hash", ts, tp);
    std::printf("%-34s pairwise %6.3fs\n", "  reference", to);
    check(a.ok == b.ok && a.edge_a == b.edge_a && a.edge_b == b.edge_b,
          "verify thread counts disagree");
    check(a.ok == c.ok, "verify kernels disagree with pairwise scan");
  }

  {
    const nrs::FiveFourLevel lvl = nrs::make_five_four_level(quick ? 2 : 3);
    std::vector<int> a, b;
    const double ts = timed([&] { a = nrs::five_four_cross(lvl, 1); });
    const double tp = timed([&] { b = nrs::five_four_cross(lvl, 0); });
    row("five_four_cross enumeration", ts, tp);
    check(a == b, "cross edge lists differ by thread count");
  }

  {
    const nrs::Hypergraph h = nrs::five_four(4);
    nrs::VerifyResult a, b;
    const double ts = timed([&] { a = nrs::verify_design(h, 4, 1); });
    const double tp = timed([&] { b = nrs::verify_design(h, 4, 0); });
    row("verify five_four(4), s=4", ts, tp);
    check(a.ok && b.ok, "five_four(4) failed verification");

    const std::int64_t iters = quick ? 200 : 2000;
    nrs::GreedyResult ga, gb;
    const double gs = timed([&] { ga = nrs::alpha_greedy(h, iters, 7, 1); });
    const double gp = timed([&] { gb = nrs::alpha_greedy(h, iters, 7, 0); });
    row("alpha_greedy five_four(4)", gs, gp);
    check(ga.best == gb.best && ga.witness == gb.witness,
          "greedy results differ by thread count");
  }

  if (!quick) {
    nrs::Hypergraph h(1, 1);
    nrs::VerifyResult a, b;
    const double tc = timed([&] { h = nrs::five_four(5); });
    std::printf("%-34s build %9.3fs   (%lld edges)\n", "five_four(5)", tc,
                (long long)h.edge_count());
    const double ts = timed([&] { a = nrs::verify_design(h, 4, 1); });
    const double tp = timed([&] { b = nrs::verify_design(h, 4, 0); });
    row("verify five_four(5), s=4", ts, tp);
    check(a.ok && b.ok, "five_four(5) failed verification");
  }

  if (failures) {
    std::fprintf(stderr, "\n%d mismatch(es)\n", failures);
    return 1;
  }
  std::printf("\nall comparisons agree\n");
  return 0;
}
