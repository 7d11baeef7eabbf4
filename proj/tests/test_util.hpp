#pragma once

#include <Eigen/Dense>

#include "gwi/montecarlo.hpp"
#include "gwi/pgf.hpp"

namespace gwtest {

inline gwi::Model make_model(std::initializer_list<double> p,
                             std::initializer_list<double> q) {
  Eigen::ArrayXd pc(p.size()), qc(q.size());
  int i = 0;
  for (double v : p) pc[i++] = v;
  i = 0;
  for (double v : q) qc[i++] = v;
  return gwi::validate_model(pc, qc);
}

// The three parameter sets used throughout: quadratic offspring
// p1 z + (1-p1) z^2 with Bernoulli immigration q0 + (1-q0) z.
inline gwi::Model fig1a() { return make_model({0, 0.3, 0.7}, {0.5, 0.5}); }
inline gwi::Model fig1b() { return make_model({0, 0.4, 0.6}, {0.5, 0.5}); }
inline gwi::Model fig1c() { return make_model({0, 0.5, 0.5}, {0.7, 0.3}); }

// Classical no-immigration variant (Q == 1).
inline gwi::Model classical() { return make_model({0, 0.3, 0.7}, {1.0}); }

// Simple deterministic pseudo-random complex points in a disc.
inline gwi::Complex rand_in_disc(gwi::SplitMix64& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform01());
  const double a = 2.0 * 3.141592653589793 * rng.uniform01();
  return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace gwtest
