#pragma once

#include <Eigen/Dense>

#include "gwi/pgf.hpp"

namespace gwi {

// Knobs for the limit-function evaluators.  t_iter caps composition depth,
// prod_terms caps infinite-product truncation, conv_tol is the early-stop
// tolerance.  The caps follow the reference recipe (70 iterations of P);
// early stopping usually kicks in well before them.
struct LimitConfig {
  int t_iter = 70;
  int prod_terms = 80;
  double conv_tol = 1e-16;
  double escape_radius = kEscapeRadius;
};

// Poincare-type limit Pi(z) = lim_t P_t(1 - z/E^t).  Pi(0) = 1, Pi'(0) = -1,
// P(Pi(z)) = Pi(Ez).  Throws Diverged outside the admissible sector.
Complex pi_eval(const Model& model, const LimitConfig& cfg, Complex z);

// R(z) = prod_{t>=1} Q(Pi(z/E^t)); R(0) = 1, R(Ez) = R(z) Q(Pi(z)).
Complex r_eval(const Model& model, const LimitConfig& cfg, Complex z);

// Pi_imm(z) = Pi(z) R(z), the Fourier transform of the density on i*R.
Complex pi_imm_eval(const Model& model, const LimitConfig& cfg, Complex z);

// Schroder limit Phi(w) = lim_t p1^{-t} P_t(w); Phi(P(w)) = p1 Phi(w),
// Phi(w) ~ w near 0.  Defined on the open filled Julia set; membership is
// decided operationally (contraction to 0 within t_iter steps).
Complex phi_eval(const Model& model, const LimitConfig& cfg, Complex w);

// Psi(w) = prod_{t>=0} Q(P_t(w))/q0 with P_0(w) = w; Q(w) Psi(P(w)) = q0 Psi(w).
Complex psi_eval(const Model& model, const LimitConfig& cfg, Complex w);

// Pi_imm(i y) for a batch of ordinates, parallelized across the grid.
// Equivalent to calling pi_imm_eval point by point, much faster for the
// inversion integrand.
Eigen::ArrayXcd pi_imm_on_imag_axis(const Model& model, const LimitConfig& cfg,
                                    const Eigen::ArrayXd& ys);

// Taylor coefficients of Pi at 0 (Pi is entire for polynomial P), from
// matching coefficients in P(Pi(z)) = Pi(Ez).  Exposed for diagnostics and
// tests; pi_eval uses them internally.
Eigen::ArrayXd pi_taylor_coeffs(const Model& model, int order);

}  // namespace gwi
