#pragma once

#include <cstdint>
#include <vector>

#include "edgegen.hpp"
#include "model.hpp"

namespace bter {

// Simple undirected graph: canonical edges (u < v), sorted, no duplicates,
// all ids < num_nodes. Isolated ids are allowed until compact().
struct Graph {
  uint64_t num_nodes = 0;
  std::vector<Edge> edges;

  uint64_t num_edges() const { return edges.size(); }
  uint64_t num_nonisolated() const;
};

// Canonicalizes endpoints, drops self loops, removes duplicates. Small inputs
// take a hash-set path; large ones are sorted in place.
Graph dedup(RawEdges raw);

// Drops isolated ids and renumbers the rest densely, preserving order.
Graph compact(const Graph& g);

}  // namespace bter
