#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "gwi/errors.hpp"

namespace gwi {

using Complex = std::complex<double>;

// Tolerance for |sum(coeffs) - 1| accepted by Pgf validation.
inline constexpr double kNormalizationTol = 1e-12;

// Radius beyond which polynomial iteration is treated as escaped.
inline constexpr double kEscapeRadius = 1e6;

// A probability-generating function with finite support:
// coeff(k) = P(count = k).  Coefficients are nonnegative and sum to 1.
class Pgf {
 public:
  explicit Pgf(Eigen::ArrayXd coeffs);

  const Eigen::ArrayXd& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int k) const {
    return (k >= 0 && k <= degree()) ? coeffs_[k] : 0.0;
  }

  // Horner evaluation of the polynomial.
  Complex eval(Complex z) const;
  double eval(double x) const;

  // First derivative at 1, i.e. the mean of the distribution.
  double mean() const;

 private:
  Eigen::ArrayXd coeffs_;
};

// Offspring law p plus immigration law q with derived scalars and the
// hypothesis flags used by the asymptotic machinery.
struct Model {
  Pgf p;
  Pgf q;
  double p1;                 // p.coeff(1)
  double q0;                 // q.coeff(0)
  double big_e;              // E = P'(1) > 1
  double q_mean;             // Q'(1)
  double schroder_exponent;  // log_E(p1*q0); the tail expansion wants < -1

  struct Flags {
    bool p1_in_unit_interval = false;  // 0 < p1 < 1
    bool p0_zero = false;              // p0 == 0
    bool q0_positive = false;          // q0 > 0
    bool supercritical = false;        // E > 1
    bool schroder_exp_lt_minus1 = false;  // log_E(p1*q0) < -1 (advisory)
  } flags;

  bool classical() const { return q_mean == 0.0; }  // Q == 1
};

// Builds a Model from raw coefficient sequences, enforcing the hard
// invariants (Schroder case, supercriticality, immigration gap).  The
// flag schroder_exp_lt_minus1 is advisory only: construction succeeds
// either way and callers decide whether to warn.
Model validate_model(const Eigen::ArrayXd& p_coeffs,
                     const Eigen::ArrayXd& q_coeffs);

// Reads {"p": [...], "q": [...]} from a JSON file.
Model load_model(const std::string& path);

// t-fold composition P_t(z) = P(P(...P(z))).  t = 0 returns z.
// Throws Overflow if an intermediate iterate leaves |.| <= escape_radius.
Complex iterate_p(const Model& model, Complex z, int t,
                  double escape_radius = kEscapeRadius);

// Coefficients of z^0..z^n_max of the generation-t PGF with immigration,
// built from P_imm,t+1(z) = P_imm,t(P(z)) Q(z) with X_0 = 1.  Truncation
// is exact: entries below n_max are the exact probabilities P(X_t = n).
Eigen::ArrayXd imm_pgf_coeffs(const Model& model, int t, int n_max);

}  // namespace gwi
