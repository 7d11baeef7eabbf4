#include "gwi/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace gwi {

namespace {

std::uint64_t path_seed(std::uint64_t seed, std::int64_t path) {
  // two scrambling rounds keep distinct (seed, path) streams apart
  SplitMix64 g(seed ^ (0xD1342543DE82EF95ULL * (path + 1)));
  g();
  return g();
}

// One generation of offspring: multinomial thinning across the support.
std::int64_t offspring_sum(const Pgf& p, std::int64_t parents, SplitMix64& rng) {
  int last = p.degree();
  while (last > 1 && p.coeff(last) == 0.0) --last;
  std::int64_t remaining = parents;
  double rem_prob = 1.0;
  std::int64_t total = 0;
  for (int k = 1; k <= last && remaining > 0; ++k) {
    const double pk = p.coeff(k);
    if (pk == 0.0) continue;
    std::int64_t draws;
    if (k == last) {
      draws = remaining;  // the final support slot takes the rest
    } else {
      std::binomial_distribution<std::int64_t> bin(
          remaining, std::min(1.0, pk / rem_prob));
      draws = bin(rng);
    }
    total += draws * k;
    remaining -= draws;
    rem_prob -= pk;
  }
  return total;
}

std::int64_t draw_immigrants(const Pgf& q, SplitMix64& rng) {
  const double u = rng.uniform01();
  double acc = 0.0;
  for (int k = 0; k <= q.degree(); ++k) {
    acc += q.coeff(k);
    if (u < acc) return k;
  }
  return q.degree();
}

}  // namespace

Eigen::ArrayXd simulate(const Model& model, const SimConfig& cfg) {
  if (cfg.n_paths < 1 || cfg.t_horizon < 1)
    throw Error("simulate: need n_paths >= 1 and t_horizon >= 1");
  Eigen::ArrayXd out(cfg.n_paths);
  const double norm = std::pow(model.big_e, -cfg.t_horizon);

  // exceptions must not cross the parallel region
  bool overflow = false;
#pragma omp parallel for schedule(static) reduction(|| : overflow)
  for (std::int64_t i = 0; i < cfg.n_paths; ++i) {
    SplitMix64 rng(path_seed(cfg.seed, i));
    std::int64_t x = 1;
    for (int t = 0; t < cfg.t_horizon && !overflow; ++t) {
      x = offspring_sum(model.p, x, rng) + draw_immigrants(model.q, rng);
      if (x > (std::int64_t{1} << 60)) overflow = true;
    }
    out[i] = static_cast<double>(x) * norm;
  }
  if (overflow)
    throw Error("simulate: population exceeds 2^60, lower t_horizon");
  return out;
}

double ks_distance(const Eigen::ArrayXd& samples, const DensityCurve& curve) {
  const Eigen::Index n = samples.size();
  if (n < 1) throw Error("ks_distance: empty sample set");
  std::vector<double> s(samples.data(), samples.data() + n);
  std::sort(s.begin(), s.end());

  const double lo = curve.xs[0];
  const double hi = curve.xs[curve.xs.size() - 1];
  const auto below = std::lower_bound(s.begin(), s.end(), lo) - s.begin();
  const auto above = s.end() - std::upper_bound(s.begin(), s.end(), hi);
  if (static_cast<double>(below + above) > 0.01 * static_cast<double>(n))
    throw InsufficientCoverage("ks_distance: curve misses > 1% of samples");

  const Eigen::ArrayXd cum = cumulative_trapezoid(curve);
  const auto curve_cdf = [&](double x) -> double {
    if (x <= lo) return 0.0;
    if (x >= hi) return cum[cum.size() - 1];
    const auto it = std::upper_bound(curve.xs.data(),
                                     curve.xs.data() + curve.xs.size(), x);
    const Eigen::Index k = (it - curve.xs.data()) - 1;
    const double dx = curve.xs[k + 1] - curve.xs[k];
    const double t = (x - curve.xs[k]) / dx;
    const double px = curve.ps[k] + t * (curve.ps[k + 1] - curve.ps[k]);
    return cum[k] + 0.5 * (curve.ps[k] + px) * (x - curve.xs[k]);
  };

  double d = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double f = curve_cdf(s[i]);
    const double emp_lo = static_cast<double>(i) / n;
    const double emp_hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(std::abs(f - emp_lo), std::abs(emp_hi - f)));
  }
  return d;
}

Eigen::ArrayXd rare_event_ratios(const Model& model, int t, int n_max) {
  const Eigen::ArrayXd coeffs = imm_pgf_coeffs(model, t, n_max);
  const double scale = std::pow(model.p1 * model.q0, -t);
  return coeffs * scale;
}

}  // namespace gwi
