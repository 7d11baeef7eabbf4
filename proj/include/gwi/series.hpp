#pragma once

#include <Eigen/Dense>

#include "gwi/pgf.hpp"

namespace gwi {

// Taylor coefficients c0..cN of an analytic function at 0, with all
// arithmetic truncated at the stated order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order)
      : c_(Eigen::ArrayXd::Zero(order + 1)) {}
  explicit TruncatedSeries(Eigen::ArrayXd coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int n) const { return c_[n]; }
  double& operator[](int n) { return c_[n]; }
  const Eigen::ArrayXd& coeffs() const { return c_; }

  // Horner evaluation of the truncated polynomial.
  Complex eval(Complex z) const;

 private:
  Eigen::ArrayXd c_;
};

// Schoolbook O(N^2) series arithmetic.  series_mul carries the smaller of
// the two input orders; series_compose carries the inner order (the outer
// series is treated as exact beyond its stated order, as for polynomials).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_compose(const TruncatedSeries& a,
                               const TruncatedSeries& b);  // needs b[0] == 0
TruncatedSeries series_reciprocal(const TruncatedSeries& a);  // needs a[0] != 0
// Compositional inverse: needs a[0] == 0, a[1] != 0.
TruncatedSeries series_reversion(const TruncatedSeries& a);

// g_n = [z^n] Phi^{-1}(z) from matching coefficients in
// Phi^{-1}(p1 z) = P(Phi^{-1}(z)), normalized by g_1 = 1.
TruncatedSeries phi_inv_coeffs(const Model& model, int n_max);

// h_n = [z^n] Psi(Phi^{-1}(z)) from
// Q(Phi^{-1}(z)) H(p1 z) = q0 H(z), h_0 = 1, where g = phi_inv_coeffs output.
TruncatedSeries psi_of_phi_inv_coeffs(const Model& model,
                                      const TruncatedSeries& g, int n_max);

// A_n = [z^n] Phi^{-1}(z) / (z Psi(Phi^{-1}(z))); A_0 = 1.
TruncatedSeries a_coeffs(const Model& model, int n_max);

}  // namespace gwi
