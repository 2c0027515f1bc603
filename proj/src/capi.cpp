#include "bter.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "assembly.hpp"
#include "edgegen.hpp"
#include "idealized.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "setup.hpp"
#include "textio.hpp"

using namespace bter;

namespace {

thread_local std::string g_last_error;

int set_error(int code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return BTER_OK;
  } catch (const Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(BTER_E_VALIDATION, "out of memory");
  } catch (const std::exception& e) {
    return set_error(BTER_E_VALIDATION, e.what());
  }
}

int require(bool ok, const char* what) {
  return ok ? BTER_OK : set_error(BTER_E_VALIDATION, what);
}

template <typename T>
T* copy_to_malloc(const std::vector<T>& v) {
  T* buf = static_cast<T*>(std::malloc(v.size() * sizeof(T)));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, v.data(), v.size() * sizeof(T));
  return buf;
}

}  // namespace

struct bter_model {
  ModelInputs inputs;
};
struct bter_tables {
  SetupTables tables;
};
struct bter_graph {
  Graph graph;
};
struct bter_pmf {
  DegreePmf pmf;
};

extern "C" {

const char* bter_last_error(void) { return g_last_error.c_str(); }

const char* bter_version(void) { return "1.0.0"; }

int bter_model_create(const uint64_t* nd, uint64_t d_max, const double* cd, double beta,
                      bter_model** out) {
  if (int rc = require(nd && out && (cd || d_max < 2), "null argument")) return rc;
  return guarded([&] {
    std::vector<uint64_t> counts(nd, nd + d_max + 1);
    std::vector<double> prof;
    if (cd) prof.assign(cd, cd + d_max + 1);
    *out = new bter_model{
        ModelInputs(DegreeDistribution(std::move(counts)), ClusteringProfile(std::move(prof)), beta)};
  });
}

int bter_model_from_files(const char* dd_path, const char* ccd_path, double beta,
                          bter_model** out) {
  if (int rc = require(dd_path && ccd_path && out, "null argument")) return rc;
  return guarded([&] {
    std::vector<uint64_t> counts = read_degree_file(dd_path);
    std::vector<double> prof = read_ccd_file(ccd_path);
    // Omitted lines in the profile file mean c_d = 0; materialize them so the
    // profile covers every degree the distribution uses.
    if (prof.size() < counts.size()) prof.resize(counts.size(), 0.0);
    *out = new bter_model{
        ModelInputs(DegreeDistribution(std::move(counts)), ClusteringProfile(std::move(prof)), beta)};
  });
}

void bter_model_free(bter_model* m) { delete m; }

uint64_t bter_model_max_degree(const bter_model* m) { return m ? m->inputs.dd.max_degree() : 0; }
uint64_t bter_model_num_nodes(const bter_model* m) { return m ? m->inputs.dd.num_nodes() : 0; }
double bter_model_target_edges(const bter_model* m) {
  return m ? m->inputs.dd.num_edges_target() : 0.0;
}

int bter_tables_build(const bter_model* m, bter_tables** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guarded([&] { *out = new bter_tables{setup(m->inputs)}; });
}

void bter_tables_free(bter_tables* t) { delete t; }

double bter_tables_phase1_weight(const bter_tables* t) { return t ? t->tables.w1 : 0.0; }
double bter_tables_phase2_weight(const bter_tables* t) { return t ? t->tables.w2 : 0.0; }
uint64_t bter_tables_num_nodes(const bter_tables* t) { return t ? t->tables.num_nodes : 0; }
uint64_t bter_tables_num_groups(const bter_tables* t) { return t ? t->tables.groups.size() : 0; }
uint64_t bter_tables_value_count(const bter_tables* t) {
  return t ? t->tables.stored_value_count() : 0;
}

int bter_tables_dump(const bter_tables* t, const char* path) {
  if (int rc = require(t && path, "null argument")) return rc;
  return guarded([&] { write_tables_dump(path, t->tables); });
}

void bter_gen_options_init(bter_gen_options* opt) {
  if (!opt) return;
  opt->seed = 0;
  opt->partitions = 1;
  opt->total_draws = 0;
  opt->cl_mode = 0;
  opt->split_phases = 0;
}

int bter_generate(const bter_tables* t, const bter_gen_options* opt, bter_gen_stats* stats,
                  bter_graph** out) {
  if (int rc = require(t && opt && out, "null argument")) return rc;
  return guarded([&] {
    GenerationPlan plan;
    plan.seed = opt->seed;
    plan.partitions = opt->partitions;
    plan.total_draws = opt->total_draws;
    plan.cl_mode = opt->cl_mode != 0;
    plan.split_phases = opt->split_phases != 0;
    GenerationStats st;
    auto t0 = std::chrono::steady_clock::now();
    RawEdges raw = generate(t->tables, plan, &st);
    auto t1 = std::chrono::steady_clock::now();
    uint64_t raw_count = raw.edges.size();
    Graph g = dedup(std::move(raw));
    auto t2 = std::chrono::steady_clock::now();
    if (stats) {
      stats->draws = st.draws;
      stats->phase1_draws = st.phase1_draws;
      stats->phase2_draws = st.phase2_draws;
      stats->self_loops = st.self_loops;
      stats->duplicates_removed = raw_count - st.self_loops - g.num_edges();
      stats->comparisons = st.comparisons;
      stats->max_comparisons_per_draw = st.max_comparisons_per_draw;
      stats->generate_seconds = std::chrono::duration<double>(t1 - t0).count();
      stats->dedup_seconds = std::chrono::duration<double>(t2 - t1).count();
    }
    *out = new bter_graph{std::move(g)};
  });
}

int bter_graph_read(const char* path, int one_based, bter_graph** out) {
  if (int rc = require(path && out, "null argument")) return rc;
  return guarded([&] { *out = new bter_graph{read_edge_file(path, one_based != 0)}; });
}

int bter_graph_write(const bter_graph* g, const char* path, int one_based) {
  if (int rc = require(g && path, "null argument")) return rc;
  return guarded([&] { write_edge_file(path, g->graph, one_based != 0); });
}

int bter_graph_compact(const bter_graph* g, bter_graph** out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] { *out = new bter_graph{compact(g->graph)}; });
}

void bter_graph_free(bter_graph* g) { delete g; }

uint64_t bter_graph_num_nodes(const bter_graph* g) { return g ? g->graph.num_nodes : 0; }
uint64_t bter_graph_num_edges(const bter_graph* g) { return g ? g->graph.num_edges() : 0; }
uint64_t bter_graph_num_nonisolated(const bter_graph* g) {
  return g ? g->graph.num_nonisolated() : 0;
}

int bter_graph_degree_counts(const bter_graph* g, uint64_t* nd, uint64_t* d_max_inout) {
  if (int rc = require(g && d_max_inout, "null argument")) return rc;
  return guarded([&] {
    DegreeCounts dc = degree_distribution(g->graph);
    if (nd) {
      if (*d_max_inout < dc.max_degree()) fail_validation("degree buffer too small");
      std::memcpy(nd, dc.counts.data(), dc.counts.size() * sizeof(uint64_t));
    }
    *d_max_inout = dc.max_degree();
  });
}

int bter_graph_ccd_exact(const bter_graph* g, double* cd, uint64_t* wedges,
                         uint64_t* d_max_inout, double* gcc) {
  if (int rc = require(g && d_max_inout, "null argument")) return rc;
  return guarded([&] {
    CcdExact m = ccd_exact(g->graph);
    uint64_t dmax = m.cd.size() - 1;
    if (cd || wedges) {
      if (*d_max_inout < dmax) fail_validation("ccd buffer too small");
      if (cd) std::memcpy(cd, m.cd.data(), m.cd.size() * sizeof(double));
      if (wedges) std::memcpy(wedges, m.wedges.data(), m.wedges.size() * sizeof(uint64_t));
    }
    *d_max_inout = dmax;
    if (gcc) *gcc = m.gcc;
  });
}

int bter_graph_ccd_sampled(const bter_graph* g, uint32_t samples_per_degree, uint64_t seed,
                           double confidence, double* cd, double* halfwidth, uint64_t* wedges,
                           uint64_t* d_max_inout, double* gcc) {
  if (int rc = require(g && d_max_inout, "null argument")) return rc;
  return guarded([&] {
    CcdSampled m = ccd_sampled(g->graph, samples_per_degree, seed, confidence);
    uint64_t dmax = m.cd.size() - 1;
    if (cd || halfwidth || wedges) {
      if (*d_max_inout < dmax) fail_validation("ccd buffer too small");
      if (cd) std::memcpy(cd, m.cd.data(), m.cd.size() * sizeof(double));
      if (halfwidth) std::memcpy(halfwidth, m.halfwidth.data(), m.halfwidth.size() * sizeof(double));
      if (wedges) std::memcpy(wedges, m.wedges.data(), m.wedges.size() * sizeof(uint64_t));
    }
    *d_max_inout = dmax;
    if (gcc) *gcc = m.gcc;
  });
}

int bter_pmf_create(bter_family family, double p1, double p2, uint64_t dstar, bter_pmf** out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    Family fam = family == BTER_DPL ? Family::dpl : Family::dgln;
    *out = new bter_pmf{pmf(fam, p1, fam == Family::dpl ? 0.0 : p2, dstar)};
  });
}

void bter_pmf_free(bter_pmf* p) { delete p; }

double bter_pmf_mean(const bter_pmf* p) { return p ? p->pmf.mean : 0.0; }
double bter_pmf_tail(const bter_pmf* p) { return p ? p->pmf.tail : 0.0; }

int bter_pmf_probs(const bter_pmf* p, double* probs) {
  if (int rc = require(p && probs, "null argument")) return rc;
  std::memcpy(probs, p->pmf.probs.data(), p->pmf.probs.size() * sizeof(double));
  return BTER_OK;
}

int bter_fit_dpl(double dbar, uint64_t dstar, double* gamma_out) {
  if (int rc = require(gamma_out != nullptr, "null argument")) return rc;
  return guarded([&] { *gamma_out = fit_dpl(dbar, dstar); });
}

int bter_fit_dgln(double dbar, uint64_t dstar, double eps_tol, double* alpha_out,
                  double* beta_out) {
  if (int rc = require(alpha_out && beta_out, "null argument")) return rc;
  return guarded([&] { fit_dgln(dbar, dstar, eps_tol, *alpha_out, *beta_out); });
}

int bter_pmf_realize(const bter_pmf* p, uint64_t n, int sample_mode, uint64_t seed, uint64_t* nd,
                     uint64_t* d_max_out) {
  if (int rc = require(p && d_max_out, "null argument")) return rc;
  return guarded([&] {
    DegreeDistribution dd = realize(p->pmf, n, sample_mode != 0, seed);
    if (nd) {
      if (*d_max_out < dd.max_degree()) fail_validation("degree buffer too small");
      std::memcpy(nd, dd.counts().data(), dd.counts().size() * sizeof(uint64_t));
    }
    *d_max_out = dd.max_degree();
  });
}

int bter_ccd_profile(double cmax, double xi, uint64_t d_max, double* cd) {
  if (int rc = require(cd != nullptr, "null argument")) return rc;
  return guarded([&] {
    std::vector<double> prof = ccd_profile(cmax, xi, d_max);
    std::memcpy(cd, prof.data(), prof.size() * sizeof(double));
  });
}

int bter_target_gcc(const uint64_t* nd, const double* cd, uint64_t d_max, double* gcc_out) {
  if (int rc = require(nd && cd && gcc_out, "null argument")) return rc;
  return guarded([&] {
    DegreeDistribution dd(std::vector<uint64_t>(nd, nd + d_max + 1));
    *gcc_out = target_gcc(dd, std::span<const double>(cd, d_max + 1));
  });
}

int bter_fit_xi(double cmax, double gcc_target, const uint64_t* nd, uint64_t d_max,
                double* xi_out) {
  if (int rc = require(nd && xi_out, "null argument")) return rc;
  return guarded([&] {
    DegreeDistribution dd(std::vector<uint64_t>(nd, nd + d_max + 1));
    *xi_out = fit_xi(cmax, gcc_target, dd);
  });
}

int bter_ccd_add_noise(double* cd, uint64_t d_max, uint64_t seed) {
  if (int rc = require(cd != nullptr, "null argument")) return rc;
  return guarded([&] {
    std::vector<double> prof(cd, cd + d_max + 1);
    add_ccd_noise(prof, seed);
    std::memcpy(cd, prof.data(), prof.size() * sizeof(double));
  });
}

int bter_read_degree_file(const char* path, uint64_t** nd_out, uint64_t* d_max_out) {
  if (int rc = require(path && nd_out && d_max_out, "null argument")) return rc;
  return guarded([&] {
    std::vector<uint64_t> counts = read_degree_file(path);
    *nd_out = copy_to_malloc(counts);
    *d_max_out = counts.size() - 1;
  });
}

int bter_write_degree_file(const char* path, const uint64_t* nd, uint64_t d_max) {
  if (int rc = require(path && nd, "null argument")) return rc;
  return guarded([&] { write_degree_file(path, std::vector<uint64_t>(nd, nd + d_max + 1)); });
}

int bter_read_ccd_file(const char* path, double** cd_out, uint64_t* d_max_out) {
  if (int rc = require(path && cd_out && d_max_out, "null argument")) return rc;
  return guarded([&] {
    std::vector<double> cd = read_ccd_file(path);
    *cd_out = copy_to_malloc(cd);
    *d_max_out = cd.size() - 1;
  });
}

int bter_write_ccd_file(const char* path, const double* cd, uint64_t d_max) {
  if (int rc = require(path && cd, "null argument")) return rc;
  return guarded([&] { write_ccd_file(path, std::vector<double>(cd, cd + d_max + 1)); });
}

int bter_write_ccd_report(const char* path, const double* cd, const uint64_t* wedges,
                          const double* halfwidth, uint64_t d_max) {
  if (int rc = require(path && cd, "null argument")) return rc;
  return guarded([&] {
    std::vector<double> cdv(cd, cd + d_max + 1);
    std::vector<uint64_t> wv;
    if (wedges) wv.assign(wedges, wedges + d_max + 1);
    std::vector<double> hv;
    if (halfwidth) hv.assign(halfwidth, halfwidth + d_max + 1);
    write_ccd_report(path, cdv, wv, hv);
  });
}

int bter_graph_ccd_logbin(const bter_graph* g, uint32_t samples_per_bin, uint64_t seed,
                          double confidence, uint64_t* lo, uint64_t* hi, double* cd,
                          uint64_t* wedges, double* halfwidth, uint64_t* rows_inout) {
  if (int rc = require(g && rows_inout, "null argument")) return rc;
  return guarded([&] {
    CcdLogBinned m = ccd_sampled_logbin(g->graph, samples_per_bin, seed, confidence);
    uint64_t rows = m.cd.size();
    if (lo || hi || cd || wedges || halfwidth) {
      if (*rows_inout < rows) fail_validation("bin buffer too small");
      if (lo) std::memcpy(lo, m.lo.data(), rows * sizeof(uint64_t));
      if (hi) std::memcpy(hi, m.hi.data(), rows * sizeof(uint64_t));
      if (cd) std::memcpy(cd, m.cd.data(), rows * sizeof(double));
      if (wedges) std::memcpy(wedges, m.wedges.data(), rows * sizeof(uint64_t));
      if (halfwidth) std::memcpy(halfwidth, m.halfwidth.data(), rows * sizeof(double));
    }
    *rows_inout = rows;
  });
}

void bter_free(void* p) { std::free(p); }

}  // extern "C"
