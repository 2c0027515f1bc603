#include "setup.hpp"

#include <algorithm>
#include <cmath>

namespace bter {

double block_connectivity(double cd) {
  if (!std::isfinite(cd) || cd < 0.0 || cd > 1.0) fail_validation("clustering coefficient outside [0, 1]");
  return std::min(std::cbrt(cd), 1.0 - 1e-6);
}

double block_weight(uint64_t nb, double rho) {
  if (rho < 0.0 || rho >= 1.0) fail_validation("block connectivity outside [0, 1)");
  double pairs = 0.5 * static_cast<double>(nb) * static_cast<double>(nb - 1);
  return pairs * std::log(1.0 / (1.0 - rho));
}

SetupTables setup(const ModelInputs& in) {
  const uint64_t dmax = in.dd.max_degree();
  const std::vector<uint64_t>& nd = in.dd.counts();

  SetupTables t;
  t.max_degree = dmax;
  t.nd = nd;
  t.degrees.id.assign(dmax + 1, 0);
  t.degrees.nd_fill.assign(dmax + 1, 0);
  t.degrees.rd.assign(dmax + 1, 0.0);
  std::vector<double> wd(dmax + 1, 0.0);

  // Node ids: degree 2 first, ascending; the degree-1 pool is numbered last.
  uint64_t next_id = 0;
  for (uint64_t d = 2; d <= dmax; ++d) {
    t.degrees.id[d] = next_id;
    next_id += nd[d];
  }
  t.degrees.id[1] = next_id;
  uint64_t n1 = dmax >= 1 ? nd[1] : 0;
  uint64_t pool1 = static_cast<uint64_t>(std::llround(in.beta * static_cast<double>(n1)));
  if (n1 > 0 && pool1 == 0) fail_validation("beta shrinks the degree-1 pool to zero");
  t.num_nodes = next_id + pool1;
  if (t.num_nodes == 0) fail_validation("degree distribution has no nodes");

  if (n1 > 0) {
    t.degrees.nd_fill[1] = pool1;
    wd[1] = 0.5 * static_cast<double>(n1);  // half an edge per original degree-1 node
    t.degrees.rd[1] = 1.0;
  }

  // Walk degrees upward, topping up the previous group's incomplete block
  // before laying out this degree's own blocks.
  uint64_t above = 0;  // nodes of degree > d, updated as a running scalar
  for (uint64_t d = 2; d <= dmax; ++d) above += nd[d];

  uint64_t pending_fill = 0;   // slots left open by the last group
  double fill_internal = 0.0;  // expected block-internal degree of those slots

  for (uint64_t d = 2; d <= dmax; ++d) {
    above -= nd[d];

    uint64_t fill = std::min<uint64_t>(pending_fill, nd[d]);
    pending_fill -= fill;
    double wfill = 0.5 * static_cast<double>(fill) * (static_cast<double>(d) - fill_internal);

    uint64_t bulk = nd[d] - fill;
    double wbulk = 0.0;
    if (bulk > 0) {
      uint64_t blocks = (bulk + d) / (d + 1);  // ceil(bulk / (d+1))
      uint64_t block_size = d + 1;
      if (blocks * (d + 1) > above + bulk) {
        // Not enough higher-degree nodes to finish the layout; only a single
        // trailing block may shrink to whatever is left.
        if (blocks != 1)
          fail_validation("degree distribution cannot be laid out into affinity blocks near degree " +
                          std::to_string(d));
        block_size = above + bulk;
      }
      double rho = block_connectivity(in.ccd.value(d));
      double internal = static_cast<double>(block_size - 1) * rho;
      wbulk = 0.5 * static_cast<double>(bulk) * (static_cast<double>(d) - internal);

      t.groups.ig.push_back(t.degrees.id[d] + fill);
      t.groups.bg.push_back(blocks);
      t.groups.ng.push_back(block_size);
      double wg = static_cast<double>(blocks) * block_weight(block_size, rho);
      t.groups.wg_cum.push_back(t.groups.total_weight() + wg);

      pending_fill = blocks * block_size - bulk;
      fill_internal = internal;
    }

    wd[d] = wfill + wbulk;
    t.degrees.nd_fill[d] = fill;
    t.degrees.rd[d] = wd[d] > 0.0 ? wfill / wd[d] : 0.0;
  }

  t.degrees.wd_cum.assign(dmax + 1, 0.0);
  double acc = 0.0;
  for (uint64_t d = 0; d <= dmax; ++d) {
    acc += wd[d];
    t.degrees.wd_cum[d] = acc;
  }

  t.w1 = t.groups.total_weight();
  t.w2 = t.degrees.total_weight();
  return t;
}

}  // namespace bter
