#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "edgegen.hpp"

namespace bter {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// CSR adjacency with sorted neighbor lists
struct Adjacency {
  std::vector<uint64_t> offsets;
  std::vector<NodeId> neighbors;

  explicit Adjacency(const Graph& g) : offsets(g.num_nodes + 1, 0) {
    for (const Edge& e : g.edges) {
      ++offsets[e.u + 1];
      ++offsets[e.v + 1];
    }
    for (uint64_t i = 0; i < g.num_nodes; ++i) offsets[i + 1] += offsets[i];
    neighbors.resize(offsets.back());
    std::vector<uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : g.edges) {
      neighbors[cursor[e.u]++] = e.v;
      neighbors[cursor[e.v]++] = e.u;
    }
    for (uint64_t v = 0; v < g.num_nodes; ++v)
      std::sort(neighbors.begin() + offsets[v], neighbors.begin() + offsets[v + 1]);
  }

  uint64_t degree(uint64_t v) const { return offsets[v + 1] - offsets[v]; }
  const NodeId* begin(uint64_t v) const { return neighbors.data() + offsets[v]; }
  const NodeId* end(uint64_t v) const { return neighbors.data() + offsets[v + 1]; }

  bool connected(uint64_t a, uint64_t b) const {
    if (degree(a) > degree(b)) std::swap(a, b);
    return std::binary_search(begin(a), end(a), b);
  }
};

uint64_t pairs2(uint64_t d) { return d * (d - 1) / 2; }

}  // namespace

DegreeCounts degree_distribution(const Graph& g) {
  std::vector<uint64_t> deg(g.num_nodes, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  uint64_t dmax = 0;
  for (uint64_t d : deg) dmax = std::max(dmax, d);
  DegreeCounts out;
  out.counts.assign(dmax + 1, 0);
  for (uint64_t d : deg) ++out.counts[d];
  return out;
}

CcdExact ccd_exact(const Graph& g) {
  Adjacency adj(g);

  std::vector<uint64_t> closed_at(g.num_nodes, 0);
  // every common neighbor w of an edge (u, v) closes one wedge centered at w
  for (const Edge& e : g.edges) {
    const NodeId* a = adj.begin(e.u);
    const NodeId* ae = adj.end(e.u);
    const NodeId* b = adj.begin(e.v);
    const NodeId* be = adj.end(e.v);
    while (a != ae && b != be) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else {
        ++closed_at[*a];
        ++a;
        ++b;
      }
    }
  }

  uint64_t dmax = 0;
  for (uint64_t v = 0; v < g.num_nodes; ++v) dmax = std::max(dmax, adj.degree(v));

  CcdExact out;
  out.wedges.assign(dmax + 1, 0);
  out.closed.assign(dmax + 1, 0);
  for (uint64_t v = 0; v < g.num_nodes; ++v) {
    uint64_t d = adj.degree(v);
    out.wedges[d] += pairs2(d);
    out.closed[d] += closed_at[v];
  }

  out.cd.assign(dmax + 1, kNan);
  for (uint64_t d = 0; d <= dmax; ++d) {
    out.total_wedges += out.wedges[d];
    out.total_closed += out.closed[d];
    if (out.wedges[d] > 0)
      out.cd[d] = static_cast<double>(out.closed[d]) / static_cast<double>(out.wedges[d]);
  }
  out.gcc = out.total_wedges > 0
                ? static_cast<double>(out.total_closed) / static_cast<double>(out.total_wedges)
                : kNan;
  return out;
}

namespace {

double hoeffding_halfwidth(uint32_t k, double confidence) {
  double delta = 1.0 - confidence;
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(k)));
}

}  // namespace

CcdSampled ccd_sampled(const Graph& g, uint32_t samples_per_degree, uint64_t seed,
                       double confidence) {
  if (samples_per_degree == 0) fail_validation("samples_per_degree must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) fail_validation("confidence must be in (0, 1)");
  Adjacency adj(g);

  uint64_t dmax = 0;
  for (uint64_t v = 0; v < g.num_nodes; ++v) dmax = std::max(dmax, adj.degree(v));

  std::vector<std::vector<NodeId>> bin_nodes(dmax + 1);
  for (uint64_t v = 0; v < g.num_nodes; ++v) {
    uint64_t d = adj.degree(v);
    if (d >= 2) bin_nodes[d].push_back(v);
  }

  CcdSampled out;
  out.confidence = confidence;
  out.cd.assign(dmax + 1, kNan);
  out.wedges.assign(dmax + 1, 0);
  out.halfwidth.assign(dmax + 1, kNan);

  RngStream rng(seed, 0);
  double hw = hoeffding_halfwidth(samples_per_degree, confidence);
  double wedge_total = 0.0, closed_weighted = 0.0;

  for (uint64_t d = 2; d <= dmax; ++d) {
    if (bin_nodes[d].empty()) continue;
    out.wedges[d] = bin_nodes[d].size() * pairs2(d);

    // nodes in one bin share a degree, so wedge-uniform = node-uniform
    uint32_t closed = 0;
    for (uint32_t s = 0; s < samples_per_degree; ++s) {
      NodeId v = bin_nodes[d][static_cast<size_t>(rng.next_double() * bin_nodes[d].size())];
      uint64_t i = static_cast<uint64_t>(rng.next_double() * static_cast<double>(d));
      uint64_t j = static_cast<uint64_t>(rng.next_double() * static_cast<double>(d - 1));
      if (j >= i) ++j;
      if (adj.connected(adj.begin(v)[i], adj.begin(v)[j])) ++closed;
    }
    out.cd[d] = static_cast<double>(closed) / samples_per_degree;
    out.halfwidth[d] = hw;
    wedge_total += static_cast<double>(out.wedges[d]);
    closed_weighted += static_cast<double>(out.wedges[d]) * out.cd[d];
  }

  out.gcc = wedge_total > 0.0 ? closed_weighted / wedge_total : kNan;
  return out;
}

CcdLogBinned ccd_sampled_logbin(const Graph& g, uint32_t samples_per_bin, uint64_t seed,
                                double confidence) {
  if (samples_per_bin == 0) fail_validation("samples_per_bin must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) fail_validation("confidence must be in (0, 1)");
  Adjacency adj(g);

  uint64_t dmax = 0;
  for (uint64_t v = 0; v < g.num_nodes; ++v) dmax = std::max(dmax, adj.degree(v));

  CcdLogBinned out;
  out.confidence = confidence;
  double hw = hoeffding_halfwidth(samples_per_bin, confidence);

  RngStream rng(seed, 0);
  for (uint64_t lo = 2; lo <= dmax; lo = 2 * lo) {
    uint64_t hi = std::min(dmax, 2 * lo - 1);

    std::vector<NodeId> nodes;
    std::vector<double> wcum;
    double wsum = 0.0;
    for (uint64_t v = 0; v < g.num_nodes; ++v) {
      uint64_t d = adj.degree(v);
      if (d >= lo && d <= hi) {
        nodes.push_back(v);
        wsum += static_cast<double>(pairs2(d));
        wcum.push_back(wsum);
      }
    }
    if (nodes.empty()) continue;

    uint32_t closed = 0;
    for (uint32_t s = 0; s < samples_per_bin; ++s) {
      size_t idx = weighted_index_sample(wcum, rng.next_double(), nullptr);
      NodeId v = nodes[idx];
      uint64_t d = adj.degree(v);
      uint64_t i = static_cast<uint64_t>(rng.next_double() * static_cast<double>(d));
      uint64_t j = static_cast<uint64_t>(rng.next_double() * static_cast<double>(d - 1));
      if (j >= i) ++j;
      if (adj.connected(adj.begin(v)[i], adj.begin(v)[j])) ++closed;
    }

    out.lo.push_back(lo);
    out.hi.push_back(hi);
    out.cd.push_back(static_cast<double>(closed) / samples_per_bin);
    out.wedges.push_back(static_cast<uint64_t>(wsum));
    out.halfwidth.push_back(hw);
  }
  return out;
}

}  // namespace bter
