// bter command line: fit idealized inputs, generate graphs, measure them,
// and compare input files. Built on the public C API only.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bter.h"

namespace {

int report_api_error(int rc) {
  std::fprintf(stderr, "error: %s\n", bter_last_error());
  return rc;
}

void echo(const char* key, const std::string& value) {
  std::printf("%s = %s\n", key, value.c_str());
}
void echo(const char* key, uint64_t value) { std::printf("%s = %" PRIu64 "\n", key, value); }
void echo(const char* key, double value) { std::printf("%s = %.6g\n", key, value); }
void echo(const char* key, bool value) { std::printf("%s = %s\n", key, value ? "on" : "off"); }

uint64_t resolve_seed(bool have_seed, uint64_t seed) {
  if (have_seed) return seed;
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

double mean_degree(const std::vector<uint64_t>& nd) {
  double n = 0.0, m2 = 0.0;
  for (size_t d = 1; d < nd.size(); ++d) {
    n += static_cast<double>(nd[d]);
    m2 += static_cast<double>(d) * static_cast<double>(nd[d]);
  }
  return n > 0.0 ? m2 / n : 0.0;
}

struct FitArgs {
  std::string family = "dgln";
  double dbar = 0.0;
  uint64_t dstar = 0;
  uint64_t n = 0;
  double eps_tol = 0.0;  // 0: default 0.1/n
  std::string mode = "expected";
  uint64_t seed = 0;
  bool have_seed = false;
  double cmax = -1.0;
  double gcc = -1.0;
  bool noise = false;
  std::string out;
};

int run_fit(const FitArgs& a) {
  uint64_t seed = resolve_seed(a.have_seed, a.seed);
  double eps_tol = a.eps_tol > 0.0 ? a.eps_tol : 0.1 / static_cast<double>(a.n);

  echo("command", std::string("fit"));
  echo("family", a.family);
  echo("dbar", a.dbar);
  echo("dstar", a.dstar);
  echo("n", a.n);
  echo("eps_tol", eps_tol);
  echo("mode", a.mode);
  echo("seed", seed);
  if (a.cmax >= 0.0) echo("cmax", a.cmax);
  if (a.gcc >= 0.0) echo("gcc", a.gcc);
  echo("noise", a.noise);
  echo("out", a.out);

  if ((a.cmax >= 0.0) != (a.gcc >= 0.0)) {
    std::fprintf(stderr, "error: --cmax and --gcc must be given together\n");
    return BTER_E_VALIDATION;
  }

  double p1 = 0.0, p2 = 0.0;
  bter_family fam;
  if (a.family == "dpl") {
    fam = BTER_DPL;
    if (int rc = bter_fit_dpl(a.dbar, a.dstar, &p1)) return report_api_error(rc);
    echo("gamma", p1);
  } else {
    fam = BTER_DGLN;
    if (int rc = bter_fit_dgln(a.dbar, a.dstar, eps_tol, &p1, &p2)) return report_api_error(rc);
    echo("alpha", p1);
    echo("beta", p2);
  }

  bter_pmf* pmf = nullptr;
  if (int rc = bter_pmf_create(fam, p1, p2, a.dstar, &pmf)) return report_api_error(rc);
  echo("pmf_mean", bter_pmf_mean(pmf));
  echo("pmf_tail", bter_pmf_tail(pmf));

  int sample_mode = a.mode == "sample" ? 1 : 0;
  uint64_t dmax = 0;
  if (int rc = bter_pmf_realize(pmf, a.n, sample_mode, seed, nullptr, &dmax)) {
    bter_pmf_free(pmf);
    return report_api_error(rc);
  }
  std::vector<uint64_t> nd(dmax + 1, 0);
  if (int rc = bter_pmf_realize(pmf, a.n, sample_mode, seed, nd.data(), &dmax)) {
    bter_pmf_free(pmf);
    return report_api_error(rc);
  }
  bter_pmf_free(pmf);
  echo("realized_dmax", dmax);
  echo("realized_mean_degree", mean_degree(nd));

  std::string dd_path = a.out + ".dd.txt";
  if (int rc = bter_write_degree_file(dd_path.c_str(), nd.data(), dmax)) return report_api_error(rc);
  echo("wrote", dd_path);

  if (a.cmax >= 0.0) {
    double xi = 0.0;
    if (int rc = bter_fit_xi(a.cmax, a.gcc, nd.data(), dmax, &xi)) return report_api_error(rc);
    echo("xi", xi);
    std::vector<double> cd(dmax + 1, 0.0);
    if (int rc = bter_ccd_profile(a.cmax, xi, dmax, cd.data())) return report_api_error(rc);
    if (a.noise) {
      if (int rc = bter_ccd_add_noise(cd.data(), dmax, seed + 1)) return report_api_error(rc);
    }
    double tg = 0.0;
    if (int rc = bter_target_gcc(nd.data(), cd.data(), dmax, &tg)) return report_api_error(rc);
    echo("target_gcc", tg);
    std::string ccd_path = a.out + ".ccd.txt";
    if (int rc = bter_write_ccd_file(ccd_path.c_str(), cd.data(), dmax)) return report_api_error(rc);
    echo("wrote", ccd_path);
  }
  return 0;
}

struct GenArgs {
  std::string dd, ccd, out;
  double beta = 1.0;
  uint64_t seed = 0;
  bool have_seed = false;
  uint32_t partitions = 1;
  uint64_t draws = 0;
  bool cl_mode = false;
  bool split_phases = false;
  bool do_compact = false;
  bool one_based = false;
  bool skip_gcc = false;
  std::string dump_tables;
};

int run_generate(const GenArgs& a) {
  uint64_t seed = resolve_seed(a.have_seed, a.seed);

  echo("command", std::string("generate"));
  echo("dd", a.dd);
  echo("ccd", a.ccd);
  echo("beta", a.beta);
  echo("seed", seed);
  echo("partitions", static_cast<uint64_t>(a.partitions));
  echo("draws", a.draws);
  echo("cl_mode", a.cl_mode);
  echo("split_phases", a.split_phases);
  echo("compact", a.do_compact);
  echo("one_based", a.one_based);
  echo("out", a.out);

  bter_model* model = nullptr;
  if (int rc = bter_model_from_files(a.dd.c_str(), a.ccd.c_str(), a.beta, &model))
    return report_api_error(rc);

  bter_tables* tables = nullptr;
  if (int rc = bter_tables_build(model, &tables)) {
    bter_model_free(model);
    return report_api_error(rc);
  }
  echo("phase1_weight", bter_tables_phase1_weight(tables));
  echo("phase2_weight", bter_tables_phase2_weight(tables));
  echo("groups", bter_tables_num_groups(tables));

  if (!a.dump_tables.empty()) {
    if (int rc = bter_tables_dump(tables, a.dump_tables.c_str())) {
      bter_tables_free(tables);
      bter_model_free(model);
      return report_api_error(rc);
    }
    echo("wrote", a.dump_tables);
  }

  bter_gen_options opt;
  bter_gen_options_init(&opt);
  opt.seed = seed;
  opt.partitions = a.partitions;
  opt.total_draws = a.draws;
  opt.cl_mode = a.cl_mode ? 1 : 0;
  opt.split_phases = a.split_phases ? 1 : 0;

  bter_gen_stats stats;
  bter_graph* graph = nullptr;
  int rc = bter_generate(tables, &opt, &stats, &graph);
  bter_tables_free(tables);
  bter_model_free(model);
  if (rc) return report_api_error(rc);

  if (a.do_compact) {
    bter_graph* dense = nullptr;
    rc = bter_graph_compact(graph, &dense);
    bter_graph_free(graph);
    if (rc) return report_api_error(rc);
    graph = dense;
  }

  rc = bter_graph_write(graph, a.out.c_str(), a.one_based ? 1 : 0);
  if (rc) {
    bter_graph_free(graph);
    return report_api_error(rc);
  }

  uint64_t noniso = bter_graph_num_nonisolated(graph);
  echo("nodes", bter_graph_num_nodes(graph));
  echo("nonisolated", noniso);
  echo("edges", bter_graph_num_edges(graph));
  uint64_t dmax = 0;
  if ((rc = bter_graph_degree_counts(graph, nullptr, &dmax))) {
    bter_graph_free(graph);
    return report_api_error(rc);
  }
  echo("max_degree", dmax);
  echo("mean_degree",
       noniso ? 2.0 * static_cast<double>(bter_graph_num_edges(graph)) / static_cast<double>(noniso)
              : 0.0);
  if (!a.skip_gcc) {
    double gcc = 0.0;
    uint64_t dm = 0;
    if ((rc = bter_graph_ccd_exact(graph, nullptr, nullptr, &dm, &gcc))) {
      bter_graph_free(graph);
      return report_api_error(rc);
    }
    echo("gcc", gcc);
  }
  echo("phase1_draws", stats.phase1_draws);
  echo("phase2_draws", stats.phase2_draws);
  echo("self_loops", stats.self_loops);
  echo("duplicates_removed", stats.duplicates_removed);
  echo("generate_seconds", stats.generate_seconds);
  echo("dedup_seconds", stats.dedup_seconds);
  echo("wrote", a.out);
  bter_graph_free(graph);
  return 0;
}

struct MeasureArgs {
  std::string graph, out;
  bool one_based = false;
  uint32_t sampled = 0;  // 0: exact
  uint64_t seed = 0;
  bool have_seed = false;
  double confidence = 0.999;
  bool log_bin = false;
};

int run_measure(const MeasureArgs& a) {
  uint64_t seed = resolve_seed(a.have_seed, a.seed);

  echo("command", std::string("measure"));
  echo("graph", a.graph);
  echo("one_based", a.one_based);
  echo("estimator", a.sampled ? std::string("sampled") : std::string("exact"));
  if (a.sampled) {
    echo("samples_per_degree", static_cast<uint64_t>(a.sampled));
    echo("seed", seed);
    echo("confidence", a.confidence);
    echo("log_bin", a.log_bin);
  }
  echo("out", a.out);

  bter_graph* g = nullptr;
  if (int rc = bter_graph_read(a.graph.c_str(), a.one_based ? 1 : 0, &g))
    return report_api_error(rc);

  uint64_t noniso = bter_graph_num_nonisolated(g);
  uint64_t edges = bter_graph_num_edges(g);
  echo("nodes", bter_graph_num_nodes(g));
  echo("nonisolated", noniso);
  echo("edges", edges);

  uint64_t dmax = 0;
  int rc = bter_graph_degree_counts(g, nullptr, &dmax);
  if (rc) {
    bter_graph_free(g);
    return report_api_error(rc);
  }
  std::vector<uint64_t> nd(dmax + 1, 0);
  if ((rc = bter_graph_degree_counts(g, nd.data(), &dmax))) {
    bter_graph_free(g);
    return report_api_error(rc);
  }
  echo("max_degree", dmax);
  echo("mean_degree",
       noniso ? 2.0 * static_cast<double>(edges) / static_cast<double>(noniso) : 0.0);

  std::string dd_path = a.out + ".dd.txt";
  if ((rc = bter_write_degree_file(dd_path.c_str(), nd.data(), dmax))) {
    bter_graph_free(g);
    return report_api_error(rc);
  }
  echo("wrote", dd_path);

  std::vector<double> cd(dmax + 1, 0.0), hw(dmax + 1, 0.0);
  std::vector<uint64_t> wedges(dmax + 1, 0);
  double gcc = 0.0;
  uint64_t dm = dmax;
  if (a.sampled == 0) {
    rc = bter_graph_ccd_exact(g, cd.data(), wedges.data(), &dm, &gcc);
    std::fill(hw.begin(), hw.end(), 0.0);
  } else {
    rc = bter_graph_ccd_sampled(g, a.sampled, seed, a.confidence, cd.data(), hw.data(),
                                wedges.data(), &dm, &gcc);
  }
  if (rc) {
    bter_graph_free(g);
    return report_api_error(rc);
  }
  echo("gcc", gcc);

  std::string ccd_path = a.out + ".ccd.txt";
  std::string report_path = a.out + ".ccd_report.txt";
  if ((rc = bter_write_ccd_file(ccd_path.c_str(), cd.data(), dmax))) {
    bter_graph_free(g);
    return report_api_error(rc);
  }
  echo("wrote", ccd_path);
  if ((rc = bter_write_ccd_report(report_path.c_str(), cd.data(), wedges.data(), hw.data(), dmax))) {
    bter_graph_free(g);
    return report_api_error(rc);
  }
  echo("wrote", report_path);

  if (a.sampled && a.log_bin) {
    uint64_t rows = 0;
    if ((rc = bter_graph_ccd_logbin(g, a.sampled, seed, a.confidence, nullptr, nullptr, nullptr,
                                    nullptr, nullptr, &rows))) {
      bter_graph_free(g);
      return report_api_error(rc);
    }
    std::vector<uint64_t> lo(rows), hi(rows), w(rows);
    std::vector<double> c(rows), h(rows);
    if ((rc = bter_graph_ccd_logbin(g, a.sampled, seed, a.confidence, lo.data(), hi.data(),
                                    c.data(), w.data(), h.data(), &rows))) {
      bter_graph_free(g);
      return report_api_error(rc);
    }
    std::string lb_path = a.out + ".ccd_logbin.txt";
    std::FILE* f = std::fopen(lb_path.c_str(), "w");
    if (!f) {
      std::fprintf(stderr, "error: cannot open %s for writing\n", lb_path.c_str());
      bter_graph_free(g);
      return BTER_E_IO;
    }
    for (uint64_t i = 0; i < rows; ++i)
      std::fprintf(f, "%" PRIu64 "-%" PRIu64 "\t%.6f\t%" PRIu64 "\t%.6f\n", lo[i], hi[i], c[i],
                   w[i], h[i]);
    std::fclose(f);
    echo("wrote", lb_path);
  }

  bter_graph_free(g);
  return 0;
}

struct CompareArgs {
  std::string dd_a, dd_b, ccd_a, ccd_b;
};

int run_compare(const CompareArgs& a) {
  echo("command", std::string("compare"));
  echo("dd_a", a.dd_a);
  echo("dd_b", a.dd_b);
  if (!a.ccd_a.empty()) echo("ccd_a", a.ccd_a);
  if (!a.ccd_b.empty()) echo("ccd_b", a.ccd_b);

  uint64_t* nd_a = nullptr;
  uint64_t* nd_b = nullptr;
  uint64_t dmax_a = 0, dmax_b = 0;
  if (int rc = bter_read_degree_file(a.dd_a.c_str(), &nd_a, &dmax_a)) return report_api_error(rc);
  if (int rc = bter_read_degree_file(a.dd_b.c_str(), &nd_b, &dmax_b)) {
    bter_free(nd_a);
    return report_api_error(rc);
  }

  std::vector<uint64_t> va(nd_a, nd_a + dmax_a + 1), vb(nd_b, nd_b + dmax_b + 1);
  double na = 0.0, nb = 0.0;
  for (uint64_t c : va) na += static_cast<double>(c);
  for (uint64_t c : vb) nb += static_cast<double>(c);
  double da = mean_degree(va), db = mean_degree(vb);

  echo("nodes_a", static_cast<uint64_t>(na));
  echo("nodes_b", static_cast<uint64_t>(nb));
  echo("max_degree_a", dmax_a);
  echo("max_degree_b", dmax_b);
  echo("mean_degree_a", da);
  echo("mean_degree_b", db);
  echo("mean_degree_rel_diff", da > 0.0 ? std::fabs(da - db) / da : 0.0);

  // L1 distance between the normalized degree histograms
  uint64_t dmax = std::max(dmax_a, dmax_b);
  double l1 = 0.0;
  for (uint64_t d = 1; d <= dmax; ++d) {
    double pa = d <= dmax_a && na > 0.0 ? static_cast<double>(va[d]) / na : 0.0;
    double pb = d <= dmax_b && nb > 0.0 ? static_cast<double>(vb[d]) / nb : 0.0;
    l1 += std::fabs(pa - pb);
  }
  echo("dd_l1_distance", l1);

  int code = 0;
  if (!a.ccd_a.empty() && !a.ccd_b.empty()) {
    double* cd_a = nullptr;
    double* cd_b = nullptr;
    uint64_t cmax_a = 0, cmax_b = 0;
    if (int rc = bter_read_ccd_file(a.ccd_a.c_str(), &cd_a, &cmax_a)) {
      bter_free(nd_a);
      bter_free(nd_b);
      return report_api_error(rc);
    }
    if (int rc = bter_read_ccd_file(a.ccd_b.c_str(), &cd_b, &cmax_b)) {
      bter_free(nd_a);
      bter_free(nd_b);
      bter_free(cd_a);
      return report_api_error(rc);
    }
    double max_diff = 0.0;
    uint64_t cm = std::max(cmax_a, cmax_b);
    for (uint64_t d = 2; d <= cm; ++d) {
      double ca = d <= cmax_a ? cd_a[d] : 0.0;
      double cb = d <= cmax_b ? cd_b[d] : 0.0;
      max_diff = std::max(max_diff, std::fabs(ca - cb));
    }
    echo("ccd_max_abs_diff", max_diff);

    double tg_a = 0.0, tg_b = 0.0;
    std::vector<double> pa(dmax_a + 1, 0.0), pb(dmax_b + 1, 0.0);
    for (uint64_t d = 2; d <= dmax_a; ++d) pa[d] = d <= cmax_a ? cd_a[d] : 0.0;
    for (uint64_t d = 2; d <= dmax_b; ++d) pb[d] = d <= cmax_b ? cd_b[d] : 0.0;
    int rca = bter_target_gcc(nd_a, pa.data(), dmax_a, &tg_a);
    int rcb = bter_target_gcc(nd_b, pb.data(), dmax_b, &tg_b);
    if (rca == 0 && rcb == 0) {
      echo("target_gcc_a", tg_a);
      echo("target_gcc_b", tg_b);
      echo("target_gcc_abs_diff", std::fabs(tg_a - tg_b));
    }
    bter_free(cd_a);
    bter_free(cd_b);
  }

  bter_free(nd_a);
  bter_free(nd_b);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs with prescribed degrees and per-degree clustering"};
  app.require_subcommand(1);

  FitArgs fit;
  CLI::App* cmd_fit = app.add_subcommand("fit", "fit idealized degree and clustering inputs");
  cmd_fit->add_option("--family", fit.family, "dpl or dgln")
      ->check(CLI::IsMember({"dpl", "dgln"}))
      ->capture_default_str();
  cmd_fit->add_option("--dbar", fit.dbar, "target mean degree")->required();
  cmd_fit->add_option("--dstar", fit.dstar, "maximum degree of the pmf support")->required();
  cmd_fit->add_option("-n,--nodes", fit.n, "number of nodes to realize")->required();
  cmd_fit->add_option("--eps-tol", fit.eps_tol, "tail bound for dgln (default 0.1/n)");
  cmd_fit->add_option("--mode", fit.mode, "expected or sample realization")
      ->check(CLI::IsMember({"expected", "sample"}))
      ->capture_default_str();
  cmd_fit->add_option("--seed", fit.seed, "rng seed (random when omitted)")
      ->each([&fit](const std::string&) { fit.have_seed = true; });
  cmd_fit->add_option("--cmax", fit.cmax, "clustering at degree 2");
  cmd_fit->add_option("--gcc", fit.gcc, "target global clustering");
  cmd_fit->add_flag("--noise", fit.noise, "jitter the written clustering profile");
  cmd_fit->add_option("-o,--out", fit.out, "output prefix")->required();

  GenArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "generate a graph from dd and ccd files");
  cmd_gen->add_option("--dd", gen.dd, "degree file")->required();
  cmd_gen->add_option("--ccd", gen.ccd, "clustering file")->required();
  cmd_gen->add_option("--beta", gen.beta, "degree-1 pool scale")->capture_default_str();
  cmd_gen->add_option("--seed", gen.seed, "rng seed (random when omitted)")
      ->each([&gen](const std::string&) { gen.have_seed = true; });
  cmd_gen->add_option("--partitions", gen.partitions, "independent sampling partitions")
      ->capture_default_str();
  cmd_gen->add_option("--draws", gen.draws, "override the edge draw budget");
  cmd_gen->add_flag("--cl-mode", gen.cl_mode, "disable phase 1 (weighted pairing only)");
  cmd_gen->add_flag("--split-phases", gen.split_phases, "binomial phase counts per partition");
  cmd_gen->add_flag("--compact", gen.do_compact, "drop isolated ids before writing");
  cmd_gen->add_flag("--one-based", gen.one_based, "write 1-based node ids");
  cmd_gen->add_flag("--no-gcc", gen.skip_gcc, "skip the clustering pass in the report");
  cmd_gen->add_option("--dump-tables", gen.dump_tables, "write the preprocessing tables");
  cmd_gen->add_option("-o,--out", gen.out, "edge list output path")->required();

  MeasureArgs meas;
  CLI::App* cmd_meas = app.add_subcommand("measure", "degree and clustering of an edge list");
  cmd_meas->add_option("--graph", meas.graph, "edge list path")->required();
  cmd_meas->add_flag("--one-based", meas.one_based, "input ids are 1-based");
  cmd_meas->add_option("--sampled", meas.sampled, "wedge samples per degree (default exact)");
  cmd_meas->add_option("--seed", meas.seed, "rng seed (random when omitted)")
      ->each([&meas](const std::string&) { meas.have_seed = true; });
  cmd_meas->add_option("--confidence", meas.confidence, "half-width confidence")
      ->capture_default_str();
  cmd_meas->add_flag("--log-bin", meas.log_bin, "also report geometric degree bins");
  cmd_meas->add_option("-o,--out", meas.out, "output prefix")->required();

  CompareArgs cmp;
  CLI::App* cmd_cmp = app.add_subcommand("compare", "diff two dd/ccd file pairs");
  cmd_cmp->add_option("--dd-a", cmp.dd_a, "first degree file")->required();
  cmd_cmp->add_option("--dd-b", cmp.dd_b, "second degree file")->required();
  cmd_cmp->add_option("--ccd-a", cmp.ccd_a, "first clustering file");
  cmd_cmp->add_option("--ccd-b", cmp.ccd_b, "second clustering file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : BTER_E_VALIDATION;
  }

  if (cmd_fit->parsed()) return run_fit(fit);
  if (cmd_gen->parsed()) return run_generate(gen);
  if (cmd_meas->parsed()) return run_measure(meas);
  if (cmd_cmp->parsed()) return run_compare(cmp);
  return BTER_E_VALIDATION;
}
