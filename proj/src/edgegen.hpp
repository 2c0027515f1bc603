#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "model.hpp"
#include "rng.hpp"
#include "setup.hpp"

namespace bter {

struct GenerationPlan {
  uint64_t seed = 0;
  uint32_t partitions = 1;
  uint64_t total_draws = 0;   // 0: round(w1 + w2)
  bool cl_mode = false;       // zero phase-1 weight; every draw becomes phase 2
  bool split_phases = false;  // draw per-partition phase counts up front instead of a coin per edge
};

struct GenerationStats {
  uint64_t draws = 0;
  uint64_t phase1_draws = 0;
  uint64_t phase2_draws = 0;
  uint64_t self_loops = 0;
  uint64_t comparisons = 0;           // weighted-sample binary search steps
  uint64_t max_comparisons_per_draw = 0;
};

// Multiset of generated edges over the id space [0, num_nodes); may contain
// duplicates and phase-2 self loops.
struct RawEdges {
  uint64_t num_nodes = 0;
  std::vector<Edge> edges;
};

// Smallest index i with u * total < cum[i]; zero-weight entries are never
// selected. Each binary-search step adds one to *comparisons.
size_t weighted_index_sample(std::span<const double> cum, double u, uint64_t* comparisons);

Edge sample_phase1(const SetupTables& t, RngStream& rng, uint64_t* comparisons);
NodeId sample_phase2_node(const SetupTables& t, RngStream& rng, uint64_t* comparisons);

RawEdges generate(const SetupTables& t, const GenerationPlan& plan, GenerationStats* stats = nullptr);

}  // namespace bter
