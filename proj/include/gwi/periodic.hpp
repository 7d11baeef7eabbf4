#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gwi/limits.hpp"

namespace gwi {

// Fourier coefficients theta(n, m) of the one-periodic functions
// (K^{n+1} L)(z), n = 0..n_max, |m| <= m_max, sampled at grid_size points
// per period on the real axis.
struct FourierTable {
  Eigen::MatrixXcd theta;  // (n_max+1) x (2*m_max+1), column index m + m_max
  int n_max = 0;
  int m_max = 0;
  int grid_size = 0;

  Complex at(int n, int m) const { return theta(n, m + m_max); }
  // sum_m theta(n, m) = (K^{n+1} L)(0) up to the |m| > m_max tail.
  Complex row_sum(int n) const { return theta.row(n).sum(); }
};

// Escape-time probe of the sector condition at the repelling fixed point 1.
// theta_star_lower is the largest probed angle whose probes 1 - r e^{i a}
// all contract into the filled Julia set; angles past pi explore the upper
// side of the outgoing real axis, so a fully-inside angle beyond pi + margin
// witnesses a sector opening wider than the tangent half-plane.
struct CriticalAngleReport {
  double theta_star_lower = 0.0;
  bool hypothesis_pi_ok = false;
  int inside = 0;
  int outside = 0;
  int inconclusive = 0;
};

// One-periodic Karlin-McGregor function K(x) = p1^{-x} Phi(Pi(E^x)) on the
// real axis; x is reduced mod 1 before evaluation.
double k_eval(const Model& model, const LimitConfig& cfg, double x);

// Immigration analogue L(x) = q0^{-x} R(E^x) Psi(Pi(E^x)).
double l_eval(const Model& model, const LimitConfig& cfg, double x);

// Discrete Fourier transform of (K^{n+1} L) over one period; K and L are
// sampled once and shared across all rows.
FourierTable fourier_table(const Model& model, const LimitConfig& cfg,
                           int n_max, int m_max, int grid_size);

// Escape-time membership probes at 1 - r e^{i angle} for every (angle,
// radius) pair.  A probe is inside once the orbit enters |w| <= 1/2,
// outside once it leaves |w| > escape radius, inconclusive at max_iter.
CriticalAngleReport julia_sector_probe(const Model& model,
                                       const std::vector<double>& angles,
                                       const std::vector<double>& radii,
                                       int max_iter);

}  // namespace gwi
