#include "model.hpp"

#include <cmath>

namespace bter {

DegreeDistribution::DegreeDistribution(std::vector<uint64_t> counts_by_degree)
    : counts_(std::move(counts_by_degree)) {
  while (counts_.size() > 1 && counts_.back() == 0) counts_.pop_back();
  if (counts_.size() < 2) fail_validation("degree distribution is empty");
  if (counts_[0] != 0) fail_validation("degree distribution has nodes of degree 0");
}

uint64_t DegreeDistribution::num_nodes() const {
  uint64_t n = 0;
  for (uint64_t c : counts_) n += c;
  return n;
}

double DegreeDistribution::num_edges_target() const {
  double m2 = 0.0;
  for (uint64_t d = 1; d < counts_.size(); ++d) m2 += static_cast<double>(d) * counts_[d];
  return m2 / 2.0;
}

double DegreeDistribution::mean_degree() const {
  return 2.0 * num_edges_target() / static_cast<double>(num_nodes());
}

ClusteringProfile::ClusteringProfile(std::vector<double> cd_by_degree) : cd_(std::move(cd_by_degree)) {
  if (cd_.size() < 2) cd_.resize(2, 0.0);
  cd_[0] = 0.0;
  cd_[1] = 0.0;
  for (uint64_t d = 2; d < cd_.size(); ++d) {
    double c = cd_[d];
    if (!std::isfinite(c) || c < 0.0 || c > 1.0)
      fail_validation("clustering coefficient for degree " + std::to_string(d) +
                      " is outside [0, 1]");
  }
}

ModelInputs::ModelInputs(DegreeDistribution dd_in, ClusteringProfile ccd_in, double beta_in)
    : dd(std::move(dd_in)), ccd(std::move(ccd_in)), beta(beta_in) {
  if (!std::isfinite(beta) || beta <= 0.0) fail_validation("beta must be positive");
  for (uint64_t d = 2; d <= dd.max_degree(); ++d) {
    if (dd.count(d) > 0 && d > ccd.max_degree())
      fail_validation("clustering profile missing degree " + std::to_string(d));
  }
}

}  // namespace bter
