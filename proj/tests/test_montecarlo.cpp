#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gwi/montecarlo.hpp"
#include "gwi/series.hpp"
#include "test_util.hpp"

using namespace gwi;

namespace {

DensityCurve reference_curve(const Model& m) {
  const LimitConfig cfg;
  const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(300, 0.01, 9.0);
  return density_fourier(m, cfg, xs, 400.0, 120001);
}

}  // namespace

TEST_SUITE_BEGIN("montecarlo");

TEST_CASE("simulate is seed-deterministic and extinction-free") {
  const Model m = gwtest::fig1a();
  SimConfig cfg;
  cfg.n_paths = 20000;
  cfg.t_horizon = 20;
  cfg.seed = 123;
  const Eigen::ArrayXd a = simulate(m, cfg);
  const Eigen::ArrayXd b = simulate(m, cfg);
  CHECK((a == b).all());
  CHECK((a > 0.0).all());  // p0 = 0 precludes extinction

  cfg.seed = 124;
  const Eigen::ArrayXd c = simulate(m, cfg);
  CHECK_FALSE((a == c).all());
}

TEST_CASE("sample mean matches 1 + Q'(1)/(E-1)") {
  for (const Model& m : {gwtest::fig1a(), gwtest::fig1c()}) {
    SimConfig cfg;
    cfg.n_paths = 100000;
    cfg.t_horizon = 30;
    cfg.seed = 7;
    const Eigen::ArrayXd w = simulate(m, cfg);
    const double mean = w.mean();
    const double sd = std::sqrt((w - mean).square().sum() / (w.size() - 1));
    const double stderr_mean = sd / std::sqrt(double(w.size()));
    const double expect = 1.0 + m.q_mean / (m.big_e - 1.0);
    CHECK(std::abs(mean - expect) <= 3.0 * stderr_mean);
  }
}

TEST_CASE("normalized variance stabilizes between generations 25 and 30") {
  const Model m = gwtest::fig1b();
  SimConfig cfg;
  cfg.n_paths = 1000000;
  cfg.seed = 99;
  cfg.t_horizon = 25;
  const Eigen::ArrayXd w25 = simulate(m, cfg);
  cfg.t_horizon = 30;
  const Eigen::ArrayXd w30 = simulate(m, cfg);
  const auto var = [](const Eigen::ArrayXd& w) {
    const double mu = w.mean();
    return (w - mu).square().sum() / (w.size() - 1);
  };
  const double v25 = var(w25);
  const double v30 = var(w30);
  CHECK(std::abs(v30 - v25) / v25 < 0.02);
}

TEST_CASE("ks_distance self-consistency by inverse-transform resampling") {
  const Model m = gwtest::fig1a();
  const DensityCurve curve = reference_curve(m);
  const Eigen::ArrayXd cum = cumulative_trapezoid(curve);
  const double total = cum[cum.size() - 1];

  SplitMix64 rng(31);
  const int n = 100000;
  Eigen::ArrayXd s(n);
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01() * total;
    // invert the piecewise-linear CDF by bisection on the grid
    Eigen::Index lo = 0, hi = cum.size() - 1;
    while (hi - lo > 1) {
      const Eigen::Index mid = (lo + hi) / 2;
      (cum[mid] <= u ? lo : hi) = mid;
    }
    const double span = cum[hi] - cum[lo];
    const double t = span > 0 ? (u - cum[lo]) / span : 0.0;
    s[i] = curve.xs[lo] + t * (curve.xs[hi] - curve.xs[lo]);
  }
  const double d = ks_distance(s, curve);
  // expected fluctuation scale ~ 0.87/sqrt(n) ~ 0.00275; twice that is a
  // comfortably rare event
  CHECK(d < 0.0086);
  CHECK(d > 0.0);
}

TEST_CASE("ks_distance degenerate and coverage cases") {
  const Model m = gwtest::fig1a();
  const DensityCurve curve = reference_curve(m);

  // all samples piled at the low edge of the grid: sup distance -> 1
  Eigen::ArrayXd constant = Eigen::ArrayXd::Constant(1000, curve.xs[0]);
  CHECK(ks_distance(constant, curve) == doctest::Approx(1.0).epsilon(1e-6));

  // shift 5% of the samples past the covered range
  SimConfig cfg;
  cfg.n_paths = 2000;
  cfg.t_horizon = 20;
  cfg.seed = 5;
  Eigen::ArrayXd s = simulate(m, cfg);
  for (int i = 0; i < 100; ++i) s[i] = curve.xs[curve.xs.size() - 1] + 1.0 + i;
  CHECK_THROWS_AS(ks_distance(s, curve), InsufficientCoverage);
}

TEST_CASE("simulation agrees with the inversion density (KS)") {
  const Model m = gwtest::fig1a();
  const DensityCurve curve = reference_curve(m);
  SimConfig cfg;
  cfg.n_paths = 100000;
  cfg.t_horizon = 30;
  cfg.seed = 2024;
  const Eigen::ArrayXd w = simulate(m, cfg);
  CHECK(ks_distance(w, curve) <= 0.02);
}

TEST_CASE("rare_event_ratios: classical single-survivor line") {
  // Q == 1, n = 1: the only way to keep X_t = 1 is one child per step,
  // so p1^{-t} P(X_t = 1) = 1 exactly.
  const Model cl = gwtest::classical();
  for (const int t : {1, 5, 17, 30}) {
    const Eigen::ArrayXd r = rare_event_ratios(cl, t, 4);
    CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r[0] == 0.0);  // extinction impossible
  }
}

TEST_CASE("rare_event_ratios converge in t and match the series route") {
  const Model m = gwtest::fig1a();
  const Eigen::ArrayXd r25 = rare_event_ratios(m, 25, 8);
  const Eigen::ArrayXd r30 = rare_event_ratios(m, 30, 8);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(r30[n] - r25[n]) < 1e-6);

  const TruncatedSeries g = phi_inv_coeffs(m, 7);
  const TruncatedSeries h = psi_of_phi_inv_coeffs(m, g, 6);
  const TruncatedSeries phi =
      series_reversion(TruncatedSeries(g.coeffs().head(7).eval()));
  const TruncatedSeries psi = series_compose(h, phi);
  const TruncatedSeries phi_imm = series_mul(phi, psi);
  for (int n = 0; n <= 6; ++n)
    CHECK(std::abs(r30[n] - phi_imm[n]) < 1e-6);
}

TEST_SUITE_END();
