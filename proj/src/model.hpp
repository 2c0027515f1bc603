#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bter {

using NodeId = uint64_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

enum class ErrorCode { validation = 2, infeasible = 3, io = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrorCode::validation, msg);
}
[[noreturn]] inline void fail_infeasible(const std::string& msg) {
  throw Error(ErrorCode::infeasible, msg);
}
[[noreturn]] inline void fail_io(const std::string& msg) { throw Error(ErrorCode::io, msg); }

// Target node counts per degree. counts[d] = number of nodes that should end
// up with degree d; counts[0] is unused and zero, counts[max_degree()] > 0.
class DegreeDistribution {
 public:
  // counts_by_degree[d] = n_d; index 0 ignored. Trailing zeros are trimmed.
  explicit DegreeDistribution(std::vector<uint64_t> counts_by_degree);

  uint64_t max_degree() const { return counts_.size() - 1; }
  uint64_t count(uint64_t d) const { return d < counts_.size() ? counts_[d] : 0; }
  const std::vector<uint64_t>& counts() const { return counts_; }

  uint64_t num_nodes() const;
  // sum_d d*n_d / 2; fractional when the total degree is odd
  double num_edges_target() const;
  double mean_degree() const;

 private:
  std::vector<uint64_t> counts_;
};

// Target per-degree clustering coefficients c_d for d in [2, max_degree].
// cd[d] in [0, 1]; cd[0], cd[1] unused and zero.
class ClusteringProfile {
 public:
  ClusteringProfile() : cd_(2, 0.0) {}
  // cd_by_degree[d] = c_d; indexes 0 and 1 ignored.
  explicit ClusteringProfile(std::vector<double> cd_by_degree);

  uint64_t max_degree() const { return cd_.size() - 1; }
  double value(uint64_t d) const { return d < cd_.size() ? cd_[d] : 0.0; }
  const std::vector<double>& values() const { return cd_; }

 private:
  std::vector<double> cd_;
};

// Validated generator inputs. The profile must cover every degree >= 2 that
// the degree distribution uses; beta scales the degree-1 pool.
struct ModelInputs {
  DegreeDistribution dd;
  ClusteringProfile ccd;
  double beta = 1.0;

  ModelInputs(DegreeDistribution dd_in, ClusteringProfile ccd_in, double beta_in);
};

}  // namespace bter
