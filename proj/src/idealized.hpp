#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "model.hpp"
#include "rng.hpp"

namespace bter {

enum class Family { dpl, dgln };  // discrete power law / discrete generalized log-normal

// Degree pmf on support [1, dstar]:
//   dpl : f(d) = d^(-p1)
//   dgln: f(d) = exp(-(ln d / p1)^p2)
struct DegreePmf {
  Family family = Family::dpl;
  double p1 = 0.0;
  double p2 = 0.0;
  uint64_t dstar = 0;
  std::vector<double> probs;  // probs[d], index 0 unused; sums to 1
  double mean = 0.0;
  double tail = 0.0;  // P(D = dstar)
};

DegreePmf pmf(Family family, double p1, double p2, uint64_t dstar);

// gamma with mean degree dbar on [1, dstar]; bisection, the mean is strictly
// decreasing in gamma. Throws infeasible when dbar is outside the bracket.
double fit_dpl(double dbar, uint64_t dstar, double rel_tol = 1e-6);

// (alpha, beta) with mean dbar and tail P(D = dstar) <= eps_tol. Nelder-Mead
// multistart in log-parameter space on
//   (mean/dbar - 1)^2 + max(0, log10 tail - log10 eps_tol)^2.
// Throws infeasible when no start reaches mean within 0.5% with the tail
// constraint satisfied.
void fit_dgln(double dbar, uint64_t dstar, double eps_tol, double& alpha, double& beta);

// Integer counts for n nodes. Expected mode: largest-remainder rounding of
// n*probs (preserves n exactly). Sample mode: n independent draws.
DegreeDistribution realize(const DegreePmf& p, uint64_t n, bool sample_mode, uint64_t seed);

// Mean clustering curve c_d = cmax * exp(-xi*(d-1)) for d in [2, dmax];
// entries 0 and 1 are zero.
std::vector<double> ccd_profile(double cmax, double xi, uint64_t dmax);

// Wedge-weighted mean of a clustering profile under dd: the global clustering
// the generator aims at. Throws validation when dd has no wedges.
double target_gcc(const DegreeDistribution& dd, std::span<const double> cd);

// xi such that target_gcc(dd, profile(cmax, xi)) = gcc_target; bisection on
// [1e-6, 10], the target is strictly decreasing in xi.
double fit_xi(double cmax, double gcc_target, const DegreeDistribution& dd, double rel_tol = 1e-4);

// Adds N(0, min(1e-2, c_d/2)) jitter per degree, clamped to [0, 1].
void add_ccd_noise(std::vector<double>& cd, uint64_t seed);

}  // namespace bter
