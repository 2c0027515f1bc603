#include "assembly.hpp"

#include <algorithm>
#include <unordered_set>

namespace bter {

uint64_t Graph::num_nonisolated() const {
  std::vector<bool> seen(num_nodes, false);
  for (const Edge& e : edges) {
    seen[e.u] = true;
    seen[e.v] = true;
  }
  uint64_t n = 0;
  for (bool b : seen) n += b;
  return n;
}

namespace {

constexpr size_t kSetPathLimit = 1 << 14;

uint64_t pack(const Edge& e) { return (e.u << 32) | e.v; }

}  // namespace

Graph dedup(RawEdges raw) {
  Graph g;
  g.num_nodes = raw.num_nodes;

  std::vector<Edge>& edges = raw.edges;
  size_t kept = 0;
  for (const Edge& e : edges) {
    if (e.u >= raw.num_nodes || e.v >= raw.num_nodes)
      fail_validation("edge endpoint out of range");
    if (e.u == e.v) continue;
    edges[kept++] = e.u < e.v ? e : Edge{e.v, e.u};
  }
  edges.resize(kept);

  if (kept < kSetPathLimit && raw.num_nodes < (1ULL << 32)) {
    std::unordered_set<uint64_t> seen;
    seen.reserve(kept * 2);
    size_t out = 0;
    for (const Edge& e : edges)
      if (seen.insert(pack(e)).second) edges[out++] = e;
    edges.resize(out);
    std::sort(edges.begin(), edges.end());
  } else {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  g.edges = std::move(edges);
  return g;
}

Graph compact(const Graph& g) {
  std::vector<uint64_t> remap(g.num_nodes, UINT64_MAX);
  for (const Edge& e : g.edges) {
    remap[e.u] = 0;
    remap[e.v] = 0;
  }
  uint64_t next = 0;
  for (uint64_t& r : remap)
    if (r == 0) r = next++;

  Graph out;
  out.num_nodes = next;
  out.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) out.edges.push_back({remap[e.u], remap[e.v]});
  return out;
}

}  // namespace bter
