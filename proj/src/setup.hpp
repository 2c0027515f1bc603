#pragma once

#include <cstdint>
#include <vector>

#include "model.hpp"

namespace bter {

// Affinity groups: runs of equal-size blocks sharing one edge weight.
// Group g covers node ids [ig[g], ig[g] + bg[g]*ng[g]).
struct GroupTable {
  std::vector<uint64_t> ig;      // first node id of the group
  std::vector<uint64_t> bg;      // number of blocks
  std::vector<uint64_t> ng;      // nodes per block
  std::vector<double> wg_cum;    // cumulative group weights

  uint64_t size() const { return ig.size(); }
  double weight(uint64_t g) const { return wg_cum[g] - (g ? wg_cum[g - 1] : 0.0); }
  double total_weight() const { return wg_cum.empty() ? 0.0 : wg_cum.back(); }
};

// Per-degree data for excess-degree sampling. Nodes of degree d occupy ids
// [id[d], id[d] + nd[d]); the first nd_fill[d] of them top up blocks opened
// by a lower degree, the rest are that degree's own bulk blocks. rd[d] is the
// fraction of degree-d excess weight owned by the fill slice.
struct DegreeTable {
  std::vector<uint64_t> id;
  std::vector<uint64_t> nd_fill;
  std::vector<double> wd_cum;    // cumulative per-degree weights
  std::vector<double> rd;

  double weight(uint64_t d) const { return wd_cum[d] - (d ? wd_cum[d - 1] : 0.0); }
  double total_weight() const { return wd_cum.empty() ? 0.0 : wd_cum.back(); }
};

struct SetupTables {
  uint64_t num_nodes = 0;        // id space; degree-1 pool ids come last
  uint64_t max_degree = 0;
  std::vector<uint64_t> nd;      // input counts, needed for bulk pool sizes
  GroupTable groups;
  DegreeTable degrees;
  double w1 = 0.0;               // total block weight (phase 1)
  double w2 = 0.0;               // total excess-degree weight (phase 2)

  // stored array elements, excluding O(1) scalars
  uint64_t stored_value_count() const {
    return nd.size() + groups.ig.size() + groups.bg.size() + groups.ng.size() +
           groups.wg_cum.size() + degrees.id.size() + degrees.nd_fill.size() +
           degrees.wd_cum.size() + degrees.rd.size();
  }
};

// Block-internal connectivity for target clustering c_d, capped just below 1
// so clique weights stay finite.
double block_connectivity(double cd);

// Expected number of independent draws needed so that the unique edges of one
// n_b-node block reach density rho: C(n_b, 2) * ln(1/(1-rho)).
double block_weight(uint64_t nb, double rho);

SetupTables setup(const ModelInputs& in);

}  // namespace bter
