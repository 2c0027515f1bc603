#include "idealized.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace bter {

namespace {

// log f(d) for d >= 1
double log_weight(Family family, double p1, double p2, double logd) {
  if (family == Family::dpl) return -p1 * logd;
  return -std::pow(logd / p1, p2);
}

struct PmfMoments {
  double mean;
  double log_tail;  // log10 P(D = dstar)
};

// mean and tail without materializing probs; shared by the fitters
PmfMoments pmf_moments(Family family, double p1, double p2, uint64_t dstar) {
  // log f(1) = 0 is the maximum for positive parameters, so no shift needed
  double z = 0.0, zd = 0.0, c1 = 0.0, c2 = 0.0;
  for (uint64_t d = 1; d <= dstar; ++d) {
    double f = std::exp(log_weight(family, p1, p2, std::log(static_cast<double>(d))));
    // Kahan accumulation keeps the normalization stable over 1e6 terms
    double y = f - c1, t = z + y;
    c1 = (t - z) - y;
    z = t;
    double yd = f * static_cast<double>(d) - c2, td = zd + yd;
    c2 = (td - zd) - yd;
    zd = td;
  }
  double lt = (log_weight(family, p1, p2, std::log(static_cast<double>(dstar))) - std::log(z)) /
              std::log(10.0);
  return {zd / z, lt};
}

}  // namespace

DegreePmf pmf(Family family, double p1, double p2, uint64_t dstar) {
  if (dstar < 1) fail_validation("dstar must be >= 1");
  if (!std::isfinite(p1) || p1 <= 0.0) fail_validation("pmf parameter must be positive");
  if (family == Family::dgln && (!std::isfinite(p2) || p2 <= 0.0))
    fail_validation("pmf parameter must be positive");

  DegreePmf out;
  out.family = family;
  out.p1 = p1;
  out.p2 = p2;
  out.dstar = dstar;
  out.probs.assign(dstar + 1, 0.0);

  double z = 0.0, c = 0.0;
  for (uint64_t d = 1; d <= dstar; ++d) {
    double f = std::exp(log_weight(family, p1, p2, std::log(static_cast<double>(d))));
    out.probs[d] = f;
    double y = f - c, t = z + y;
    c = (t - z) - y;
    z = t;
  }
  double mean = 0.0, cm = 0.0;
  for (uint64_t d = 1; d <= dstar; ++d) {
    out.probs[d] /= z;
    double y = out.probs[d] * static_cast<double>(d) - cm, t = mean + y;
    cm = (t - mean) - y;
    mean = t;
  }
  out.mean = mean;
  out.tail = out.probs[dstar];
  return out;
}

double fit_dpl(double dbar, uint64_t dstar, double rel_tol) {
  if (!(dbar > 1.0)) fail_validation("dbar must exceed 1");
  double lo = 0.1, hi = 10.0;
  double mean_lo = pmf_moments(Family::dpl, lo, 0.0, dstar).mean;
  double mean_hi = pmf_moments(Family::dpl, hi, 0.0, dstar).mean;
  if (dbar > mean_lo || dbar < mean_hi)
    fail_infeasible("dbar outside the mean-degree range reachable for gamma in [0.1, 10]");
  while (hi - lo > rel_tol * lo) {
    double mid = 0.5 * (lo + hi);
    if (pmf_moments(Family::dpl, mid, 0.0, dstar).mean > dbar)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

double dgln_objective(double la, double lb, double dbar, uint64_t dstar, double log10_eps) {
  PmfMoments m = pmf_moments(Family::dgln, std::exp(la), std::exp(lb), dstar);
  double rel = m.mean / dbar - 1.0;
  double pen = std::max(0.0, m.log_tail - log10_eps);
  return rel * rel + pen * pen;
}

struct SimplexPoint {
  double x[2];
  double f;
};

void nelder_mead(std::function<double(double, double)> fn, double x0, double x1, double step,
                 int iters, double& bx0, double& bx1, double& bf) {
  SimplexPoint s[3] = {{{x0, x1}, fn(x0, x1)},
                       {{x0 + step, x1}, fn(x0 + step, x1)},
                       {{x0, x1 + step}, fn(x0, x1 + step)}};
  for (int it = 0; it < iters; ++it) {
    std::sort(s, s + 3, [](const SimplexPoint& a, const SimplexPoint& b) { return a.f < b.f; });
    if (s[2].f - s[0].f < 1e-16) break;
    double cx = 0.5 * (s[0].x[0] + s[1].x[0]);
    double cy = 0.5 * (s[0].x[1] + s[1].x[1]);
    double rx = cx + (cx - s[2].x[0]), ry = cy + (cy - s[2].x[1]);
    double fr = fn(rx, ry);
    if (fr < s[0].f) {
      double ex = cx + 2.0 * (cx - s[2].x[0]), ey = cy + 2.0 * (cy - s[2].x[1]);
      double fe = fn(ex, ey);
      if (fe < fr)
        s[2] = {{ex, ey}, fe};
      else
        s[2] = {{rx, ry}, fr};
    } else if (fr < s[1].f) {
      s[2] = {{rx, ry}, fr};
    } else {
      double kx = cx + 0.5 * (s[2].x[0] - cx), ky = cy + 0.5 * (s[2].x[1] - cy);
      double fk = fn(kx, ky);
      if (fk < s[2].f) {
        s[2] = {{kx, ky}, fk};
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].x[0] = s[0].x[0] + 0.5 * (s[i].x[0] - s[0].x[0]);
          s[i].x[1] = s[0].x[1] + 0.5 * (s[i].x[1] - s[0].x[1]);
          s[i].f = fn(s[i].x[0], s[i].x[1]);
        }
      }
    }
  }
  std::sort(s, s + 3, [](const SimplexPoint& a, const SimplexPoint& b) { return a.f < b.f; });
  bx0 = s[0].x[0];
  bx1 = s[0].x[1];
  bf = s[0].f;
}

}  // namespace

void fit_dgln(double dbar, uint64_t dstar, double eps_tol, double& alpha, double& beta) {
  if (!(dbar > 1.0)) fail_validation("dbar must exceed 1");
  if (!(eps_tol > 0.0)) fail_validation("eps_tol must be positive");
  double log10_eps = std::log10(eps_tol);
  auto fn = [&](double la, double lb) { return dgln_objective(la, lb, dbar, dstar, log10_eps); };

  const double starts[3][2] = {{std::log(std::log(dbar) + 1.0), std::log(2.0)},
                               {std::log(2.0), std::log(1.8)},
                               {std::log(1.5 * (std::log(dbar) + 1.0)), std::log(2.5)}};
  double best_f = std::numeric_limits<double>::infinity();
  double best_a = 0.0, best_b = 0.0;
  for (const auto& st : starts) {
    double bx0, bx1, bf;
    nelder_mead(fn, st[0], st[1], 0.15, 400, bx0, bx1, bf);
    if (bf < best_f) {
      best_f = bf;
      best_a = std::exp(bx0);
      best_b = std::exp(bx1);
    }
  }

  PmfMoments m = pmf_moments(Family::dgln, best_a, best_b, dstar);
  if (std::abs(m.mean / dbar - 1.0) > 0.005 || m.log_tail > log10_eps)
    fail_infeasible("no (alpha, beta) reaches the requested mean degree with the tail bound");
  alpha = best_a;
  beta = best_b;
}

DegreeDistribution realize(const DegreePmf& p, uint64_t n, bool sample_mode, uint64_t seed) {
  if (n == 0) fail_validation("node count must be >= 1");
  std::vector<uint64_t> counts(p.dstar + 1, 0);

  if (sample_mode) {
    std::vector<double> cum(p.dstar, 0.0);
    double acc = 0.0;
    for (uint64_t d = 1; d <= p.dstar; ++d) {
      acc += p.probs[d];
      cum[d - 1] = acc;
    }
    RngStream rng(seed, 0);
    for (uint64_t i = 0; i < n; ++i) {
      size_t idx = std::upper_bound(cum.begin(), cum.end(), rng.next_double() * acc) - cum.begin();
      if (idx >= cum.size()) idx = cum.size() - 1;
      counts[idx + 1]++;
    }
  } else {
    // largest-remainder rounding: floors first, then the biggest fractions
    std::vector<std::pair<double, uint64_t>> rem;
    rem.reserve(p.dstar);
    uint64_t assigned = 0;
    for (uint64_t d = 1; d <= p.dstar; ++d) {
      double x = static_cast<double>(n) * p.probs[d];
      uint64_t fl = static_cast<uint64_t>(std::floor(x));
      counts[d] = fl;
      assigned += fl;
      rem.push_back({x - static_cast<double>(fl), d});
    }
    if (assigned > n) fail_validation("rounding overflow in degree realization");
    uint64_t left = n - assigned;
    std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (uint64_t k = 0; k < left; ++k) counts[rem[k].second]++;
  }

  return DegreeDistribution(std::move(counts));
}

std::vector<double> ccd_profile(double cmax, double xi, uint64_t dmax) {
  if (!(cmax >= 0.0 && cmax <= 1.0)) fail_validation("cmax must be in [0, 1]");
  if (!(xi >= 0.0)) fail_validation("xi must be >= 0");
  std::vector<double> cd(dmax + 1, 0.0);
  for (uint64_t d = 2; d <= dmax; ++d)
    cd[d] = cmax * std::exp(-xi * static_cast<double>(d - 1));
  return cd;
}

double target_gcc(const DegreeDistribution& dd, std::span<const double> cd) {
  double wedges = 0.0, closed = 0.0;
  for (uint64_t d = 2; d <= dd.max_degree(); ++d) {
    double w = static_cast<double>(dd.count(d)) * 0.5 * static_cast<double>(d) *
               static_cast<double>(d - 1);
    wedges += w;
    closed += w * (d < cd.size() ? cd[d] : 0.0);
  }
  if (!(wedges > 0.0)) fail_validation("degree distribution has no wedges");
  return closed / wedges;
}

double fit_xi(double cmax, double gcc_target, const DegreeDistribution& dd, double rel_tol) {
  if (!(cmax > 0.0 && cmax <= 1.0)) fail_validation("cmax must be in (0, 1]");
  if (!(gcc_target > 0.0)) fail_validation("gcc target must be positive");
  if (gcc_target >= cmax) fail_infeasible("gcc target must lie below cmax");

  auto eval = [&](double xi) { return target_gcc(dd, ccd_profile(cmax, xi, dd.max_degree())); };
  double lo = 1e-6, hi = 10.0;
  if (eval(lo) < gcc_target) return lo;
  if (eval(hi) > gcc_target) fail_infeasible("gcc target below the reachable range for xi <= 10");
  while (hi - lo > rel_tol * lo) {
    double mid = 0.5 * (lo + hi);
    if (eval(mid) > gcc_target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void add_ccd_noise(std::vector<double>& cd, uint64_t seed) {
  RngStream rng(seed, 0);
  std::normal_distribution<double> unit(0.0, 1.0);
  for (uint64_t d = 2; d < cd.size(); ++d) {
    double sigma = std::min(1e-2, cd[d] / 2.0);
    if (sigma <= 0.0) continue;
    cd[d] = std::clamp(cd[d] + sigma * unit(rng), 0.0, 1.0);
  }
}

}  // namespace bter
