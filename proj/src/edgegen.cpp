#include "edgegen.hpp"

#include <cmath>
#include <random>

namespace bter {

size_t weighted_index_sample(std::span<const double> cum, double u, uint64_t* comparisons) {
  if (cum.empty()) fail_validation("weighted sample over empty table");
  double total = cum.back();
  if (!(total > 0.0)) fail_validation("weighted sample over zero total weight");
  double target = u * total;
  size_t lo = 0, hi = cum.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (comparisons) ++*comparisons;
    if (target < cum[mid])
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

Edge sample_phase1(const SetupTables& t, RngStream& rng, uint64_t* comparisons) {
  size_t g = weighted_index_sample(t.groups.wg_cum, rng.next_double(), comparisons);
  uint64_t bg = t.groups.bg[g];
  uint64_t ng = t.groups.ng[g];
  uint64_t block = static_cast<uint64_t>(rng.next_double() * static_cast<double>(bg));
  uint64_t base = t.groups.ig[g] + block * ng;
  uint64_t i = static_cast<uint64_t>(rng.next_double() * static_cast<double>(ng));
  uint64_t j = static_cast<uint64_t>(rng.next_double() * static_cast<double>(ng - 1));
  if (j >= i) ++j;  // uniform over the block's off-diagonal pairs
  return {base + i, base + j};
}

NodeId sample_phase2_node(const SetupTables& t, RngStream& rng, uint64_t* comparisons) {
  size_t d = weighted_index_sample(t.degrees.wd_cum, rng.next_double(), comparisons);
  uint64_t fill = t.degrees.nd_fill[d];
  if (rng.next_double() < t.degrees.rd[d]) {
    uint64_t off = static_cast<uint64_t>(rng.next_double() * static_cast<double>(fill));
    return t.degrees.id[d] + off;
  }
  uint64_t bulk = t.nd[d] - fill;
  uint64_t off = static_cast<uint64_t>(rng.next_double() * static_cast<double>(bulk));
  return t.degrees.id[d] + fill + off;
}

namespace {

void run_partition(const SetupTables& t, const GenerationPlan& plan, uint32_t part, uint64_t quota,
                   double w1, double w, std::vector<Edge>& out, GenerationStats& st) {
  RngStream rng(plan.seed, part);

  uint64_t phase1_quota = 0;
  if (plan.split_phases && quota > 0) {
    double p = w > 0.0 ? w1 / w : 0.0;
    std::binomial_distribution<uint64_t> dist(quota, p);
    phase1_quota = dist(rng);
  }

  for (uint64_t k = 0; k < quota; ++k) {
    bool phase1;
    if (plan.split_phases) {
      phase1 = k < phase1_quota;
    } else {
      phase1 = w1 > 0.0 && rng.next_double() * w < w1;
    }
    uint64_t cmp = 0;
    Edge e;
    if (phase1) {
      e = sample_phase1(t, rng, &cmp);
      ++st.phase1_draws;
    } else {
      e.u = sample_phase2_node(t, rng, &cmp);
      e.v = sample_phase2_node(t, rng, &cmp);
      ++st.phase2_draws;
      if (e.u == e.v) ++st.self_loops;
    }
    st.comparisons += cmp;
    st.max_comparisons_per_draw = std::max(st.max_comparisons_per_draw, cmp);
    out.push_back(e);
  }
}

}  // namespace

RawEdges generate(const SetupTables& t, const GenerationPlan& plan, GenerationStats* stats) {
  if (plan.partitions == 0) fail_validation("partitions must be >= 1");

  double w1 = plan.cl_mode ? 0.0 : t.w1;
  double w = w1 + t.w2;
  uint64_t total = plan.total_draws > 0 ? plan.total_draws
                                        : static_cast<uint64_t>(std::llround(w));
  if (w1 > 0.0 && t.groups.size() == 0) fail_validation("phase-1 weight without groups");
  if (total > 0 && !(w > 0.0)) fail_validation("no edge weight to sample from");

  RawEdges raw;
  raw.num_nodes = t.num_nodes;
  raw.edges.reserve(total);
  GenerationStats st;
  st.draws = total;

  for (uint32_t p = 0; p < plan.partitions; ++p) {
    uint64_t quota = total / plan.partitions + (p < total % plan.partitions ? 1 : 0);
    run_partition(t, plan, p, quota, w1, w, raw.edges, st);
  }

  if (stats) *stats = st;
  return raw;
}

}  // namespace bter
