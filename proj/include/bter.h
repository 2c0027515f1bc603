/* bter: scalable generator for graphs with prescribed degrees and
 * per-degree clustering, plus the measurement and fitting utilities the
 * bundled CLI is built on.
 *
 * All functions return BTER_OK (0) or a nonzero error code; the message for
 * the most recent failure on the calling thread is available through
 * bter_last_error(). Arrays indexed by degree have length max_degree + 1
 * with entry 0 unused.
 */
#ifndef BTER_H
#define BTER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BTER_OK 0
#define BTER_E_VALIDATION 2 /* bad inputs or parameters */
#define BTER_E_INFEASIBLE 3 /* fit target out of reach */
#define BTER_E_IO 4         /* file cannot be read or written */

const char* bter_last_error(void);
const char* bter_version(void);

/* ------------------------------------------------------------------ */
/* model inputs: target degree counts + per-degree clustering + beta   */

typedef struct bter_model bter_model;

/* nd[d] = number of nodes of degree d, d in [1, d_max]; cd[d] = target
 * clustering for degree-d nodes, d in [2, d_max] (cd may be NULL when
 * d_max < 2). beta scales the degree-1 id pool. */
int bter_model_create(const uint64_t* nd, uint64_t d_max, const double* cd, double beta,
                      bter_model** out);
int bter_model_from_files(const char* dd_path, const char* ccd_path, double beta,
                          bter_model** out);
void bter_model_free(bter_model* m);

uint64_t bter_model_max_degree(const bter_model* m);
uint64_t bter_model_num_nodes(const bter_model* m);
double bter_model_target_edges(const bter_model* m);

/* ------------------------------------------------------------------ */
/* preprocessing tables                                                */

typedef struct bter_tables bter_tables;

int bter_tables_build(const bter_model* m, bter_tables** out);
void bter_tables_free(bter_tables* t);

double bter_tables_phase1_weight(const bter_tables* t);
double bter_tables_phase2_weight(const bter_tables* t);
uint64_t bter_tables_num_nodes(const bter_tables* t);
uint64_t bter_tables_num_groups(const bter_tables* t);
/* stored array elements across all tables (the O(d_max) footprint) */
uint64_t bter_tables_value_count(const bter_tables* t);
int bter_tables_dump(const bter_tables* t, const char* path);

/* ------------------------------------------------------------------ */
/* edge generation                                                     */

typedef struct bter_graph bter_graph;

typedef struct bter_gen_options {
  uint64_t seed;
  uint32_t partitions;   /* independent substreams; >= 1 */
  uint64_t total_draws;  /* 0: round(w1 + w2) */
  int cl_mode;           /* nonzero: zero phase-1 weight (pure weighted pairing) */
  int split_phases;      /* nonzero: binomial per-partition phase counts up front */
} bter_gen_options;

void bter_gen_options_init(bter_gen_options* opt);

typedef struct bter_gen_stats {
  uint64_t draws;
  uint64_t phase1_draws;
  uint64_t phase2_draws;
  uint64_t self_loops;
  uint64_t duplicates_removed;
  uint64_t comparisons;
  uint64_t max_comparisons_per_draw;
  double generate_seconds;
  double dedup_seconds;
} bter_gen_stats;

/* Draws the planned number of raw edges, removes self loops and duplicates,
 * and returns the finished graph. stats may be NULL. */
int bter_generate(const bter_tables* t, const bter_gen_options* opt, bter_gen_stats* stats,
                  bter_graph** out);

/* ------------------------------------------------------------------ */
/* graphs                                                              */

int bter_graph_read(const char* path, int one_based, bter_graph** out);
int bter_graph_write(const bter_graph* g, const char* path, int one_based);
/* drops isolated ids and renumbers densely */
int bter_graph_compact(const bter_graph* g, bter_graph** out);
void bter_graph_free(bter_graph* g);

uint64_t bter_graph_num_nodes(const bter_graph* g);
uint64_t bter_graph_num_edges(const bter_graph* g);
uint64_t bter_graph_num_nonisolated(const bter_graph* g);

/* ------------------------------------------------------------------ */
/* measurement                                                         */

/* Degree counts. Query pass: *d_max_inout = capacity of nd (pass 0 with
 * nd = NULL to learn the size); on return it holds the graph's max degree.
 * nd[0] receives the isolated count. */
int bter_graph_degree_counts(const bter_graph* g, uint64_t* nd, uint64_t* d_max_inout);

/* Exact per-degree clustering from full wedge enumeration. cd/wedges may be
 * NULL; otherwise they must hold d_max+1 entries (query d_max as above).
 * Bins without wedges come back as NaN. gcc may be NULL. */
int bter_graph_ccd_exact(const bter_graph* g, double* cd, uint64_t* wedges,
                         uint64_t* d_max_inout, double* gcc);

/* Wedge-sampling estimate: samples_per_degree uniform wedges per bin,
 * halfwidth[d] = Hoeffding bound at the given confidence. */
int bter_graph_ccd_sampled(const bter_graph* g, uint32_t samples_per_degree, uint64_t seed,
                           double confidence, double* cd, double* halfwidth, uint64_t* wedges,
                           uint64_t* d_max_inout, double* gcc);

/* Same estimator over geometric degree bins [2,3], [4,7], ...: arrays are
 * per bin row; query the row count by passing NULL arrays. */
int bter_graph_ccd_logbin(const bter_graph* g, uint32_t samples_per_bin, uint64_t seed,
                          double confidence, uint64_t* lo, uint64_t* hi, double* cd,
                          uint64_t* wedges, double* halfwidth, uint64_t* rows_inout);

/* ------------------------------------------------------------------ */
/* idealized degree and clustering profiles                            */

typedef enum bter_family { BTER_DPL = 0, BTER_DGLN = 1 } bter_family;

typedef struct bter_pmf bter_pmf;

/* p2 is ignored for BTER_DPL */
int bter_pmf_create(bter_family family, double p1, double p2, uint64_t dstar, bter_pmf** out);
void bter_pmf_free(bter_pmf* p);
double bter_pmf_mean(const bter_pmf* p);
double bter_pmf_tail(const bter_pmf* p);
/* probs must hold dstar + 1 entries; entry 0 is zero */
int bter_pmf_probs(const bter_pmf* p, double* probs);

int bter_fit_dpl(double dbar, uint64_t dstar, double* gamma_out);
int bter_fit_dgln(double dbar, uint64_t dstar, double eps_tol, double* alpha_out,
                  double* beta_out);

/* Integer counts for n nodes: expected-value rounding (sample_mode = 0) or n
 * independent draws. Two-call: with nd = NULL, *d_max_out receives the
 * realized max degree for the given arguments; the realization is
 * deterministic in (p, n, sample_mode, seed), so a second call with a buffer
 * of that size returns the matching counts. */
int bter_pmf_realize(const bter_pmf* p, uint64_t n, int sample_mode, uint64_t seed, uint64_t* nd,
                     uint64_t* d_max_out);

/* cd must hold d_max + 1 entries; fills cmax * exp(-xi*(d-1)) for d >= 2 */
int bter_ccd_profile(double cmax, double xi, uint64_t d_max, double* cd);
/* expected global clustering when a graph realizes nd with profile cd */
int bter_target_gcc(const uint64_t* nd, const double* cd, uint64_t d_max, double* gcc_out);
int bter_fit_xi(double cmax, double gcc_target, const uint64_t* nd, uint64_t d_max,
                double* xi_out);
/* N(0, min(1e-2, cd[d]/2)) jitter, clamped to [0, 1] */
int bter_ccd_add_noise(double* cd, uint64_t d_max, uint64_t seed);

/* ------------------------------------------------------------------ */
/* text formats (degree file: "d<TAB>n_d"; ccd file: "d<TAB>c_d")      */

int bter_read_degree_file(const char* path, uint64_t** nd_out, uint64_t* d_max_out);
int bter_write_degree_file(const char* path, const uint64_t* nd, uint64_t d_max);
int bter_read_ccd_file(const char* path, double** cd_out, uint64_t* d_max_out);
int bter_write_ccd_file(const char* path, const double* cd, uint64_t d_max);
/* report rows "d<TAB>c_d<TAB>wedges<TAB>halfwidth" for defined bins */
int bter_write_ccd_report(const char* path, const double* cd, const uint64_t* wedges,
                          const double* halfwidth, uint64_t d_max);

/* frees buffers returned by the *_out functions above */
void bter_free(void* p);

#ifdef __cplusplus
}
#endif

#endif /* BTER_H */
