#pragma once

#include <Eigen/Dense>

#include "gwi/periodic.hpp"
#include "gwi/series.hpp"

namespace gwi {

// Entire reciprocal gamma 1/Gamma(s); Lanczos approximation with reflection
// for Re(s) < 1/2.  Exactly zero at nonpositive integers.
Complex recip_gamma(Complex s);

// Gamma argument of the weight of term (n, m):
// -(ln(p1^{n+1} q0) + 2 pi i m) / ln E.
Complex gamma_argument(const Model& model, int n, int m);

// x-exponent of term n: -log_E(p1^{n+1} q0) - 1; strictly increasing in n.
double term_exponent(const Model& model, int n);

// One term of the double series: x^exponent carries the power, weight
// collects A_n theta(n,m) / Gamma(.).
struct SeriesTerm {
  int n = 0;
  int m = 0;
  Complex exponent;
  Complex weight;
};

SeriesTerm series_term(const Model& model, const TruncatedSeries& a,
                       const FourierTable& table, int n, int m);

// Relative magnitude below which a sampled Fourier coefficient is treated
// as grid noise and excluded from gamma-weighted sums.  theta(n, m) decays
// exponentially in |m| but double-precision sampling floors out near
// 1e-15 of the row scale, and 1/Gamma grows fast enough along i*R to blow
// sub-noise coefficients up into dominant garbage.
inline constexpr double kFourierNoiseGuard = 1e-12;

// One-periodic B_n(z) = sum_m theta(n,m) e^{2 pi i m z} / Gamma(.), real by
// conjugate pairing.  Sub-noise coefficients are skipped (kFourierNoiseGuard).
double b_n_eval(const FourierTable& table, const Model& model, int n,
                double z);

struct DensityValue {
  double value = 0.0;
  double last_term = 0.0;  // |final summand|, truncation diagnostic
};

// Left-tail series: sum_{n=0}^{n_terms} A_n x^{e_n} B_n(-log_E x) for x > 0.
DensityValue density_series(const Model& model, const TruncatedSeries& a,
                            const FourierTable& table, double x, int n_terms);

// m = 0 truncation of the series: sum_{n=0}^{m_terms} of
// (K^{n+1} L)(0) A_n / Gamma(-ln(p1^{n+1} q0)/ln E) * x^{e_n},
// with (K^{n+1} L)(0) taken from the table's row sums.
double density_quick(const Model& model, const TruncatedSeries& a,
                     const FourierTable& table, double x, int m_terms);

// Vectorized grid evaluation of density_quick (one log per x, Eigen exp).
Eigen::ArrayXd density_quick_grid(const Model& model, const TruncatedSeries& a,
                                  const FourierTable& table,
                                  const Eigen::ArrayXd& xs, int m_terms);

}  // namespace gwi
