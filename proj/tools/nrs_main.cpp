#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrs/analysis.hpp"
#include "nrs/constructions.hpp"
#include "nrs/edge_io.hpp"
#include "nrs/hypergraph.hpp"

namespace {

void emit(const nrs::Hypergraph& h, const std::string& out) {
  if (out.empty())
    nrs::write_edge_list(std::cout, h);
  else
    nrs::write_edge_list_file(out, h);
}

bool parse_params(const std::string& text, int& n, int& r, int& s) {
  char extra = 0;
  return std::sscanf(text.c_str(), "%d,%d,%d%c", &n, &r, &s, &extra) == 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, transform, and analyze (n,r,s)-systems"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a system from parameters");
  construct->require_subcommand(1);

  int ap_r = 0, ap_k = 0;
  std::string ap_out;
  auto* c_ap = construct->add_subcommand("ap", "arithmetic-progression system on Z_r^k");
  c_ap->add_option("--r", ap_r, "modulus and uniformity")->required();
  c_ap->add_option("--k", ap_k, "dimension")->required();
  c_ap->add_option("-o,--output", ap_out, "output edge list")->required();

  int ff_k = 0, ff_threads = 0;
  std::string ff_out;
  auto* c_ff = construct->add_subcommand("five-four", "recursive (3^k,5,4)-system");
  c_ff->add_option("--k", ff_k, "level")->required();
  c_ff->add_option("--threads", ff_threads, "worker threads (0 = default)");
  c_ff->add_option("-o,--output", ff_out, "output edge list")->required();

  int rs_n = 0, rs_r = 0, rs_s = 0;
  std::string rs_out;
  auto* c_rs = construct->add_subcommand("rs", "composite (n,r,s)-system pipeline");
  c_rs->add_option("--n", rs_n, "vertices")->required();
  c_rs->add_option("--r", rs_r, "uniformity")->required();
  c_rs->add_option("--s", rs_s, "strength")->required();
  c_rs->add_option("-o,--output", rs_out, "output edge list")->required();

  std::string sh_in, sh_out;
  int sh_rp = 0;
  auto* sh = app.add_subcommand("shadow", "replace edges by their first r' ids");
  sh->add_option("-i,--input", sh_in)->required();
  sh->add_option("--r-prime", sh_rp, "target uniformity")->required();
  sh->add_option("-o,--output", sh_out, "output edge list (default stdout)");

  std::vector<std::string> pr_in;
  std::string pr_out;
  auto* pr = app.add_subcommand("product", "direct product of two systems");
  pr->add_option("-i,--input", pr_in, "two input edge lists")->expected(2);
  pr->add_option("-o,--output", pr_out, "output edge list (default stdout)");

  std::string tr_in, tr_out;
  int tr_n = 0;
  auto* tr = app.add_subcommand("trim", "restrict to the first n vertices");
  tr->add_option("-i,--input", tr_in)->required();
  tr->add_option("--n", tr_n, "vertices to keep")->required();
  tr->add_option("-o,--output", tr_out, "output edge list (default stdout)");

  std::string ve_in;
  int ve_s = 0, ve_threads = 0;
  auto* ve = app.add_subcommand("verify", "check the pairwise-intersection bound");
  ve->add_option("-i,--input", ve_in)->required();
  ve->add_option("--s", ve_s, "strength")->required();
  ve->add_option("--threads", ve_threads, "worker threads (0 = default)");

  std::string al_in;
  bool al_exact = false, al_greedy = false;
  std::int64_t al_budget = 100'000'000, al_iters = 100;
  std::uint64_t al_seed = 0;
  int al_threads = 0;
  auto* al = app.add_subcommand("alpha", "independence number");
  al->add_option("-i,--input", al_in)->required();
  al->add_flag("--exact", al_exact, "branch-and-bound search");
  al->add_option("--budget", al_budget, "node budget for --exact");
  al->add_flag("--greedy", al_greedy, "randomized multi-start search");
  al->add_option("--iters", al_iters, "iterations for --greedy");
  auto* al_seed_opt = al->add_option("--seed", al_seed, "rng seed (required for --greedy)");
  al->add_option("--threads", al_threads, "worker threads (0 = default)");

  std::string bo_which;
  double bo_n = 0.0, bo_f = 0.0, bo_g = 0.0;
  int bo_r = 0, bo_s = 0, bo_k = 0, bo_n1 = 0, bo_n2 = 0, bo_r1 = 0;
  auto* bo = app.add_subcommand("bounds", "closed-form bound values");
  bo->add_option("--which", bo_which, "rs | pp20 | five-four | product")->required();
  bo->add_option("--n", bo_n);
  bo->add_option("--r", bo_r);
  bo->add_option("--s", bo_s);
  bo->add_option("--k", bo_k);
  bo->add_option("--n1", bo_n1);
  bo->add_option("--n2", bo_n2);
  bo->add_option("--r1", bo_r1);
  bo->add_option("--f", bo_f);
  bo->add_option("--g", bo_g);

  std::string re_in, re_params, re_json;
  std::uint64_t re_seed = 0;
  std::int64_t re_iters = 100, re_budget = 0;
  int re_threads = 0, re_n1 = 0, re_n2 = 0, re_r1 = 0;
  double re_f = 0.0, re_g = 0.0;
  auto* re = app.add_subcommand("report", "full JSON report for a system");
  re->add_option("-i,--input", re_in)->required();
  re->add_option("--params", re_params, "claimed n,r,s")->required();
  re->add_option("--json", re_json, "output file")->required();
  re->add_option("--seed", re_seed, "rng seed")->required();
  re->add_option("--iters", re_iters, "greedy iterations");
  re->add_option("--budget", re_budget, "exact-solver node budget (0 skips)");
  re->add_option("--threads", re_threads, "worker threads (0 = default)");
  auto* re_n1_opt = re->add_option("--n1", re_n1, "product bound: left vertices");
  auto* re_n2_opt = re->add_option("--n2", re_n2, "product bound: right vertices");
  auto* re_r1_opt = re->add_option("--r1", re_r1, "product bound: left uniformity");
  auto* re_f_opt = re->add_option("--f", re_f, "product bound: left alpha ratio");
  auto* re_g_opt = re->add_option("--g", re_g, "product bound: right alpha ratio");
  re_n1_opt->needs(re_n2_opt, re_r1_opt, re_f_opt, re_g_opt);
  re_f_opt->needs(re_n1_opt);
  re_g_opt->needs(re_n1_opt);
  re_n2_opt->needs(re_n1_opt);
  re_r1_opt->needs(re_n1_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_ap->parsed()) {
      emit(nrs::ap_system(ap_r, ap_k), ap_out);
      return 0;
    }
    if (c_ff->parsed()) {
      emit(nrs::five_four(ff_k, ff_threads), ff_out);
      return 0;
    }
    if (c_rs->parsed()) {
      emit(nrs::build_rs_system(rs_n, rs_r, rs_s).h, rs_out);
      return 0;
    }
    if (sh->parsed()) {
      emit(nrs::shadow(nrs::read_edge_list_file(sh_in), sh_rp), sh_out);
      return 0;
    }
    if (pr->parsed()) {
      emit(nrs::product(nrs::read_edge_list_file(pr_in[0]),
                        nrs::read_edge_list_file(pr_in[1])),
           pr_out);
      return 0;
    }
    if (tr->parsed()) {
      emit(nrs::trim(nrs::read_edge_list_file(tr_in), tr_n), tr_out);
      return 0;
    }
    if (ve->parsed()) {
      const nrs::Hypergraph h = nrs::read_edge_list_file(ve_in);
      const nrs::VerifyResult v = nrs::verify_design(h, ve_s, ve_threads);
      if (v.ok) {
        std::printf("ok\n");
        return 0;
      }
      std::fprintf(stderr, "violation: edges %lld and %lld share at least %d vertices\n",
                   (long long)v.edge_a, (long long)v.edge_b, ve_s);
      return 2;
    }
    if (al->parsed()) {
      if (!al_exact && !al_greedy)
        throw CLI::ValidationError("alpha", "pass --exact and/or --greedy");
      if (al_greedy && al_seed_opt->count() == 0)
        throw CLI::ValidationError("alpha", "--greedy requires an explicit --seed");
      const nrs::Hypergraph h = nrs::read_edge_list_file(al_in);
      int code = 0;
      if (al_exact) {
        const nrs::AlphaResult r = nrs::alpha_exact(h, al_budget);
        if (r.exact)
          std::printf("alpha_exact %d\n", r.lower);
        else {
          std::printf("alpha_bounds %d %d\n", r.lower, r.upper);
          code = 3;
        }
        std::printf("witness");
        for (int v : r.witness) std::printf(" %d", v);
        std::printf("\n");
      }
      if (al_greedy) {
        const nrs::GreedyResult r = nrs::alpha_greedy(h, al_iters, al_seed, al_threads);
        std::printf("alpha_greedy %d\n", r.best);
        std::printf("witness");
        for (int v : r.witness) std::printf(" %d", v);
        std::printf("\n");
      }
      return code;
    }
    if (bo->parsed()) {
      if (bo_which == "rs") {
        std::printf("%.2f\n", nrs::bound_rs_lower(bo_n, bo_r, bo_s));
      } else if (bo_which == "pp20") {
        std::printf("%.2f\n", nrs::bound_pp20(bo_k));
      } else if (bo_which == "five-four") {
        std::printf("%.2f\n", nrs::bound_five_four(bo_k));
      } else if (bo_which == "product") {
        const nrs::ProductBound b = nrs::bound_product_h(bo_n1, bo_n2, bo_r1, bo_f, bo_g);
        std::printf("%lld %.2f\n", b.t, b.h);
      } else {
        throw CLI::ValidationError("bounds", "--which must be rs, pp20, five-four, or product");
      }
      return 0;
    }
    if (re->parsed()) {
      int n = 0, r = 0, s = 0;
      if (!parse_params(re_params, n, r, s))
        throw CLI::ValidationError("report", "--params must look like n,r,s");
      const nrs::Hypergraph h = nrs::read_edge_list_file(re_in);
      nrs::ReportOptions opt;
      opt.seed = re_seed;
      opt.greedy_iterations = re_iters;
      opt.exact_budget = re_budget;
      opt.threads = re_threads;
      if (re_n1_opt->count())
        opt.product = nrs::ProductBoundInputs{re_n1, re_n2, re_r1, re_f, re_g};
      const nlohmann::ordered_json doc =
          nrs::report(h, nrs::DesignParams(n, r, s), opt);
      std::ofstream out(re_json);
      if (!out) throw std::runtime_error("cannot open " + re_json + " for writing");
      out << doc.dump(2) << '\n';
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
