#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gwi/periodic.hpp"
#include "gwi/series.hpp"
#include "test_util.hpp"

using namespace gwi;

TEST_SUITE_BEGIN("periodic");

TEST_CASE("k is one-periodic and positive") {
  // k_eval reduces mod 1 internally, so compare against the raw formula
  // p1^{-x} Phi(Pi(E^x)) evaluated at x + 1 and x + 2 without reduction.
  const Model m = gwtest::fig1a();
  const LimitConfig cfg;
  const auto raw_k = [&](double x) {
    return std::pow(m.p1, -x) *
           phi_eval(m, cfg, pi_eval(m, cfg, std::pow(m.big_e, x))).real();
  };
  for (const double x : {0.0, 0.25, 0.5}) {
    CHECK(std::abs(raw_k(x + 1.0) - k_eval(m, cfg, x)) < 1e-8);
    CHECK(std::abs(raw_k(x + 2.0) - k_eval(m, cfg, x)) < 1e-8);
    CHECK(k_eval(m, cfg, x) > 0.0);
  }
  for (double x = 0.0; x < 1.0; x += 0.17) CHECK(k_eval(m, cfg, x) > 0.0);
}

TEST_CASE("k inverts pi through the Schroder conjugation") {
  // Pi(z) = Phi^{-1}(z^{log_E p1} K(log_E z)); checked with Phi applied to
  // both sides (Phi is injective there, and the truncated Phi^{-1} series
  // has its convergence radius right at this argument).  The two sides go
  // through unrelated code paths: direct Pi at z vs K at the reduced point.
  const Model m = gwtest::fig1a();
  const LimitConfig cfg;
  for (const double z : {3.0, 5.0, 11.0}) {
    const double log_e_z = std::log(z) / std::log(m.big_e);
    const double rhs = std::pow(z, std::log(m.p1) / std::log(m.big_e)) *
                       k_eval(m, cfg, log_e_z);
    const Complex lhs = phi_eval(m, cfg, pi_eval(m, cfg, z));
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}

TEST_CASE("l is one-periodic; classical case collapses to 1") {
  const Model m = gwtest::fig1c();
  const LimitConfig cfg;
  const auto raw_l = [&](double x) {
    const double ex = std::pow(m.big_e, x);
    return std::pow(m.q0, -x) *
           (r_eval(m, cfg, ex) * psi_eval(m, cfg, pi_eval(m, cfg, ex))).real();
  };
  for (const double x : {0.0, 0.25, 0.5})
    CHECK(std::abs(raw_l(x + 1.0) - l_eval(m, cfg, x)) < 1e-8);

  const Model cl = gwtest::classical();
  for (const double x : {0.0, 0.3, 0.9})
    CHECK(l_eval(cl, cfg, x) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("R Psi(Pi) satisfies the one-period functional equation") {
  // R(Ez) Psi(Pi(Ez)) = q0 R(z) Psi(Pi(z)) on real z
  const Model m = gwtest::fig1a();
  const LimitConfig cfg;
  for (const double z : {0.5, 1.0, 2.0, 4.0}) {
    const Complex lhs = r_eval(m, cfg, m.big_e * z) *
                        psi_eval(m, cfg, pi_eval(m, cfg, m.big_e * z));
    const Complex rhs =
        m.q0 * r_eval(m, cfg, z) * psi_eval(m, cfg, pi_eval(m, cfg, z));
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("fourier table symmetry, row sums, positivity") {
  const Model m = gwtest::fig1a();
  const LimitConfig cfg;
  const FourierTable tab = fourier_table(m, cfg, 8, 6, 256);

  for (int n = 0; n <= tab.n_max; ++n) {
    for (int mm = 1; mm <= tab.m_max; ++mm) {
      CHECK(std::abs(tab.at(n, -mm) - std::conj(tab.at(n, mm))) <= 1e-12);
    }
    CHECK(tab.at(n, 0).real() > 0.0);
    CHECK(std::abs(tab.at(n, 0).imag()) < 1e-14);
    // row sum reproduces (K^{n+1} L)(0)
    const double direct = std::pow(k_eval(m, cfg, 0.0), n + 1) *
                          l_eval(m, cfg, 0.0);
    CHECK(std::abs(tab.row_sum(n).real() - direct) < 1e-8);
    CHECK(std::abs(tab.row_sum(n).imag()) < 1e-12);
  }
}

TEST_CASE("fourier table is stable under grid refinement") {
  const Model m = gwtest::fig1b();
  const LimitConfig cfg;
  const FourierTable coarse = fourier_table(m, cfg, 4, 4, 256);
  const FourierTable fine = fourier_table(m, cfg, 4, 4, 512);
  for (int n = 0; n <= 4; ++n)
    for (int mm = -4; mm <= 4; ++mm)
      CHECK(std::abs(std::abs(coarse.at(n, mm)) - std::abs(fine.at(n, mm))) <
            1e-8);
}

TEST_CASE("julia probe: disc points are inside, quadratic family opens past pi") {
  const Model m = gwtest::fig1a();
  const std::vector<double> radii{0.02, 0.05, 0.1};

  // a single angle well inside the disc sector
  CriticalAngleReport rep =
      julia_sector_probe(m, {std::numbers::pi / 2}, radii, 3000);
  CHECK(rep.inside == 3);
  CHECK(rep.outside == 0);

  // full sweep at 0.01 rad resolution
  std::vector<double> angles;
  for (double a = 0.01; a < 1.5 * std::numbers::pi; a += 0.01)
    angles.push_back(a);
  for (const Model& mm : {gwtest::fig1a(), gwtest::fig1b(), gwtest::fig1c()}) {
    const CriticalAngleReport sweep =
        julia_sector_probe(mm, angles, radii, 3000);
    CHECK(sweep.hypothesis_pi_ok);
    CHECK(sweep.theta_star_lower > std::numbers::pi);
    CHECK(sweep.theta_star_lower >= std::numbers::pi - 0.01);
  }
}

TEST_CASE("julia probe records inconclusive probes and excludes them") {
  const Model m = gwtest::fig1a();
  // max_iter too small to decide anything
  const CriticalAngleReport rep =
      julia_sector_probe(m, {0.4, 0.5}, {0.05}, 1);
  CHECK(rep.inconclusive == 2);
  CHECK(rep.theta_star_lower == 0.0);
  CHECK_FALSE(rep.hypothesis_pi_ok);
}

TEST_SUITE_END();
