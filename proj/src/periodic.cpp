#include "gwi/periodic.hpp"

#include <cmath>
#include <numbers>

namespace gwi {

namespace {

double reduce_mod1(double x) {
  double r = x - std::floor(x);
  if (r == 1.0) r = 0.0;
  return r;
}

}  // namespace

double k_eval(const Model& model, const LimitConfig& cfg, double x) {
  const double xr = reduce_mod1(x);
  const Complex pi_val = pi_eval(model, cfg, std::pow(model.big_e, xr));
  const Complex phi_val = phi_eval(model, cfg, pi_val);
  return std::pow(model.p1, -xr) * phi_val.real();
}

double l_eval(const Model& model, const LimitConfig& cfg, double x) {
  const double xr = reduce_mod1(x);
  const double ex = std::pow(model.big_e, xr);
  const Complex pi_val = pi_eval(model, cfg, ex);
  const Complex r_val = r_eval(model, cfg, ex);
  const Complex psi_val = psi_eval(model, cfg, pi_val);
  return std::pow(model.q0, -xr) * (r_val * psi_val).real();
}

FourierTable fourier_table(const Model& model, const LimitConfig& cfg,
                           int n_max, int m_max, int grid_size) {
  if (grid_size < 4 * m_max)
    throw Error("fourier_table: grid_size must be at least 4*m_max");

  Eigen::ArrayXd k_samp(grid_size), l_samp(grid_size);
  bool failed = false;
#pragma omp parallel for schedule(static) reduction(|| : failed)
  for (int j = 0; j < grid_size; ++j) {
    try {
      const double x = static_cast<double>(j) / grid_size;
      k_samp[j] = k_eval(model, cfg, x);
      l_samp[j] = l_eval(model, cfg, x);
    } catch (const Error&) {
      failed = true;
    }
  }
  if (failed)
    throw NotInBasin("fourier_table: K/L evaluation failed on the grid");

  FourierTable table;
  table.n_max = n_max;
  table.m_max = m_max;
  table.grid_size = grid_size;
  table.theta.resize(n_max + 1, 2 * m_max + 1);

  // Precompute the twiddle factors e^{-2 pi i m j / G} per m.
  Eigen::ArrayXd pw = k_samp;  // K^{n+1}
  Eigen::ArrayXcd f(grid_size);
  for (int n = 0; n <= n_max; ++n) {
    f = (pw * l_samp).cast<Complex>();
    for (int m = -m_max; m <= m_max; ++m) {
      Complex acc = 0.0;
      const double w = -2.0 * std::numbers::pi * m / grid_size;
      for (int j = 0; j < grid_size; ++j)
        acc += f[j] * Complex(std::cos(w * j), std::sin(w * j));
      table.theta(n, m + m_max) = acc / static_cast<double>(grid_size);
    }
    pw *= k_samp;
  }
  return table;
}

CriticalAngleReport julia_sector_probe(const Model& model,
                                       const std::vector<double>& angles,
                                       const std::vector<double>& radii,
                                       int max_iter) {
  CriticalAngleReport rep;
  for (const double angle : angles) {
    bool all_inside = true;
    for (const double r : radii) {
      Complex w = 1.0 - r * Complex(std::cos(angle), std::sin(angle));
      int verdict = 0;  // 1 inside, -1 outside, 0 inconclusive
      for (int it = 0; it < max_iter; ++it) {
        const double aw = std::abs(w);
        if (aw <= 0.5) {
          verdict = 1;  // |w| <= 1/2 is mapped into itself and contracts to 0
          break;
        }
        if (aw > kEscapeRadius) {
          verdict = -1;
          break;
        }
        w = model.p.eval(w);
      }
      if (verdict == 1) {
        ++rep.inside;
      } else if (verdict == -1) {
        ++rep.outside;
        all_inside = false;
      } else {
        ++rep.inconclusive;
        all_inside = false;  // undecided probes cannot certify the angle
      }
    }
    if (all_inside && angle > rep.theta_star_lower)
      rep.theta_star_lower = angle;
  }

  // Margin of one probe step, if the grid is regular enough to tell.
  double margin = 0.0;
  if (angles.size() >= 2) margin = std::abs(angles[1] - angles[0]);
  rep.hypothesis_pi_ok = rep.theta_star_lower > std::numbers::pi + margin;
  return rep;
}

}  // namespace gwi
