#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "gwi/inversion.hpp"

namespace gwi {

// SplitMix64: tiny splittable generator; per-path streams are derived from
// (seed, path index) so results do not depend on thread count.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ULL; }
  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform01() { return ((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct SimConfig {
  std::int64_t n_paths = 100000;
  int t_horizon = 30;
  std::uint64_t seed = 1;
};

// Samples of the normalized population E^{-t} X_t after t_horizon
// generations; offspring counts are drawn by binomial thinning over the
// support of P, immigration by inverse CDF over Q.
Eigen::ArrayXd simulate(const Model& model, const SimConfig& cfg);

// Sup distance between the empirical CDF of samples and the curve's
// trapezoid CDF.  Throws InsufficientCoverage when more than 1% of the
// sample mass falls outside the curve's grid.
double ks_distance(const Eigen::ArrayXd& samples, const DensityCurve& curve);

// (p1 q0)^{-t} P(X_t = n) for n = 0..n_max from the exact finite-time
// coefficients; converges to [z^n] Phi(z) Psi(z) as t grows.
Eigen::ArrayXd rare_event_ratios(const Model& model, int t, int n_max);

}  // namespace gwi
