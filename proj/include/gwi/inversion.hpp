#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

#include "gwi/limits.hpp"

namespace gwi {

enum class Method { fourier, series, quick, montecarlo };

const char* method_name(Method m);

// A sampled density: strictly increasing grid xs with values ps, plus the
// knobs that produced it (written to the manifest sidecar by the CLI).
struct DensityCurve {
  Eigen::ArrayXd xs;
  Eigen::ArrayXd ps;
  Method method = Method::fourier;
  std::map<std::string, double> params;
};

// Checks the curve invariants: grid strictly increasing, finite values,
// trapezoid mass within [0, 1.02].  Throws Error on violation.
void check_curve(const DensityCurve& curve);

// Trapezoid mass over the whole covered range.
double curve_mass(const DensityCurve& curve);

// Cumulative trapezoid integral at every grid point (F[0] = 0).
Eigen::ArrayXd cumulative_trapezoid(const DensityCurve& curve);

// Reference density by Fourier inversion of Pi_imm on the imaginary axis:
// p(x) = (1/pi) Re int_0^{y_max} Pi_imm(i y) e^{i y x} dy, trapezoidal rule
// with n_points samples (conjugate symmetry halves the range).  Samples are
// computed once and reused for every x; accumulation is compensated in
// extended precision.
DensityCurve density_fourier(const Model& model, const LimitConfig& cfg,
                             const Eigen::ArrayXd& xs, double y_max,
                             int n_points);

// Trapezoid mass of the curve on [min x, x0]; monotone in x0.
double tail_mass(const DensityCurve& curve, double x0);

}  // namespace gwi
