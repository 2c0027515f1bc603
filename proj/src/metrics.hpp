#pragma once

#include <cstdint>
#include <vector>

#include "assembly.hpp"
#include "model.hpp"
#include "rng.hpp"

namespace bter {

struct DegreeCounts {
  std::vector<uint64_t> counts;  // counts[d] = nodes of degree d; counts[0] = isolated
  uint64_t max_degree() const { return counts.size() - 1; }
};

DegreeCounts degree_distribution(const Graph& g);

// Per-degree clustering from full wedge enumeration. cd[d] is NaN for degree
// bins with zero wedges (undefined, not 0).
struct CcdExact {
  std::vector<double> cd;
  std::vector<uint64_t> wedges;  // wedges centered at degree-d nodes
  std::vector<uint64_t> closed;
  uint64_t total_wedges = 0;
  uint64_t total_closed = 0;
  double gcc = 0.0;  // total_closed / total_wedges
};

CcdExact ccd_exact(const Graph& g);

// Per-degree clustering from uniform wedge samples: samples_per_degree wedges
// per nonempty bin, closure checked by adjacency lookup. Half-widths are
// Hoeffding bounds at the given confidence.
struct CcdSampled {
  std::vector<double> cd;        // NaN where undefined
  std::vector<uint64_t> wedges;  // true wedge count per bin
  std::vector<double> halfwidth;
  double confidence = 0.0;
  double gcc = 0.0;  // wedge-weighted mean of the bin estimates
};

CcdSampled ccd_sampled(const Graph& g, uint32_t samples_per_degree, uint64_t seed,
                       double confidence = 0.999);

// Same estimator over geometric degree bins [2,3], [4,7], [8,15], ...;
// wedge-uniform within each bin.
struct CcdLogBinned {
  std::vector<uint64_t> lo, hi;
  std::vector<double> cd;
  std::vector<uint64_t> wedges;
  std::vector<double> halfwidth;
  double confidence = 0.0;
};

CcdLogBinned ccd_sampled_logbin(const Graph& g, uint32_t samples_per_bin, uint64_t seed,
                                double confidence = 0.999);

}  // namespace bter
