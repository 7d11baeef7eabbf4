#include "gwi/inversion.hpp"

#include <cmath>
#include <numbers>

namespace gwi {

const char* method_name(Method m) {
  switch (m) {
    case Method::fourier: return "fourier";
    case Method::series: return "series";
    case Method::quick: return "quick";
    case Method::montecarlo: return "montecarlo";
  }
  return "?";
}

void check_curve(const DensityCurve& curve) {
  if (curve.xs.size() != curve.ps.size() || curve.xs.size() < 2)
    throw Error("curve: grid and values must match and hold >= 2 points");
  for (Eigen::Index i = 0; i + 1 < curve.xs.size(); ++i)
    if (!(curve.xs[i] < curve.xs[i + 1]))
      throw Error("curve: grid must be strictly increasing");
  if (!curve.ps.isFinite().all()) throw Error("curve: non-finite density value");
  const double mass = curve_mass(curve);
  if (!(mass >= 0.0 && mass <= 1.02))
    throw Error("curve: trapezoid mass " + std::to_string(mass) +
                " outside [0, 1.02]");
}

double curve_mass(const DensityCurve& curve) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i + 1 < curve.xs.size(); ++i)
    acc += 0.5 * (curve.ps[i] + curve.ps[i + 1]) *
           (curve.xs[i + 1] - curve.xs[i]);
  return acc;
}

Eigen::ArrayXd cumulative_trapezoid(const DensityCurve& curve) {
  Eigen::ArrayXd f(curve.xs.size());
  f[0] = 0.0;
  for (Eigen::Index i = 1; i < curve.xs.size(); ++i)
    f[i] = f[i - 1] + 0.5 * (curve.ps[i] + curve.ps[i - 1]) *
                          (curve.xs[i] - curve.xs[i - 1]);
  return f;
}

DensityCurve density_fourier(const Model& model, const LimitConfig& cfg,
                             const Eigen::ArrayXd& xs, double y_max,
                             int n_points) {
  if (xs.size() < 1 || !(xs[0] > 0.0))
    throw Error("density_fourier: x grid must be positive");
  if (!(y_max > 0.0) || n_points < 2)
    throw Error("density_fourier: need y_max > 0 and n_points >= 2");

  const double h = y_max / (n_points - 1);
  Eigen::ArrayXd ys =
      Eigen::ArrayXd::LinSpaced(n_points, 0.0, y_max);
  const Eigen::ArrayXcd samples = pi_imm_on_imag_axis(model, cfg, ys);

  DensityCurve curve;
  curve.xs = xs;
  curve.ps.resize(xs.size());
  curve.method = Method::fourier;
  curve.params = {{"y_max", y_max},
                  {"n_points", static_cast<double>(n_points)},
                  {"t_iter", static_cast<double>(cfg.t_iter)},
                  {"prod_terms", static_cast<double>(cfg.prod_terms)}};

#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const Complex rot(std::cos(h * x), std::sin(h * x));
    Complex phase = 1.0;
    // trapezoid: half weights at both ends; extended-precision accumulator
    long double acc = 0.5L * samples[0].real();
    for (int j = 1; j < n_points; ++j) {
      phase *= rot;
      if ((j & 0xfff) == 0)  // contain phase drift over ~10^6 steps
        phase = Complex(std::cos(h * x * j), std::sin(h * x * j));
      const double term =
          samples[j].real() * phase.real() - samples[j].imag() * phase.imag();
      acc += (j == n_points - 1) ? 0.5L * term : term;
    }
    curve.ps[i] = static_cast<double>(acc) * h / std::numbers::pi;
  }
  return curve;
}

double tail_mass(const DensityCurve& curve, double x0) {
  const Eigen::Index n = curve.xs.size();
  if (n < 2) throw Error("tail_mass: curve too short");
  if (x0 < curve.xs[0] || x0 > curve.xs[n - 1])
    throw OutOfRange("tail_mass: x0 outside the curve range");
  double acc = 0.0;
  for (Eigen::Index i = 0; i + 1 < n && curve.xs[i] < x0; ++i) {
    const double hi = std::min(x0, curve.xs[i + 1]);
    const double t = (hi - curve.xs[i]) / (curve.xs[i + 1] - curve.xs[i]);
    const double p_hi = curve.ps[i] + t * (curve.ps[i + 1] - curve.ps[i]);
    acc += 0.5 * (curve.ps[i] + p_hi) * (hi - curve.xs[i]);
  }
  return acc;
}

}  // namespace gwi
