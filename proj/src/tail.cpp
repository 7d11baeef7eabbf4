#include "gwi/tail.hpp"

#include <cmath>
#include <numbers>

namespace gwi {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, 9-term coefficient set.
constexpr int kLanczosG = 7;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi s) computed against the nearest integer so that the zeros at
// integer s are exact.
Complex sin_pi(Complex s) {
  const double rounded = std::nearbyint(s.real());
  const Complex frac = s - rounded;
  const Complex v = std::sin(kPi * frac);
  const bool odd = std::fmod(std::abs(rounded), 2.0) == 1.0;
  return odd ? -v : v;
}

Complex lanczos_gamma(Complex z) {
  // requires Re(z) >= 0.5
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < kLanczosG + 2; ++i) x += kLanczos[i] / (z + double(i));
  const Complex t = z + (kLanczosG + 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

Complex recip_gamma(Complex s) {
  if (s.real() < 0.5) {
    // 1/Gamma(s) = sin(pi s) Gamma(1 - s) / pi
    return sin_pi(s) * lanczos_gamma(1.0 - s) / kPi;
  }
  return 1.0 / lanczos_gamma(s);
}

Complex gamma_argument(const Model& model, int n, int m) {
  const double ln_e = std::log(model.big_e);
  const double ln_pq = (n + 1) * std::log(model.p1) + std::log(model.q0);
  return -Complex(ln_pq, 2.0 * kPi * m) / ln_e;
}

double term_exponent(const Model& model, int n) {
  return gamma_argument(model, n, 0).real() - 1.0;
}

namespace {
void check_term_range(const TruncatedSeries& a, const FourierTable& table,
                      int n, int m) {
  if (n < 0 || n > table.n_max || n > a.order() || std::abs(m) > table.m_max)
    throw OutOfRange("tail: term index outside the table/series range");
}
}  // namespace

SeriesTerm series_term(const Model& model, const TruncatedSeries& a,
                       const FourierTable& table, int n, int m) {
  check_term_range(a, table, n, m);
  SeriesTerm t;
  t.n = n;
  t.m = m;
  const Complex arg = gamma_argument(model, n, m);
  t.exponent = arg - 1.0;
  t.weight = a[n] * table.at(n, m) * recip_gamma(arg);
  return t;
}

double b_n_eval(const FourierTable& table, const Model& model, int n,
                double z) {
  if (n < 0 || n > table.n_max)
    throw OutOfRange("b_n_eval: n outside the table range");
  // m = 0 plus conjugate pairs; the sum is real term by term.  Coefficients
  // below the sampling noise floor are dropped: their true values decay
  // exponentially in |m| (strip analyticity) while their sampled values are
  // grid noise that the reciprocal-gamma weight, growing like
  // exp(pi^2 |m| / ln E), would amplify into garbage.
  const double guard = kFourierNoiseGuard * std::abs(table.at(n, 0));
  double acc = (table.at(n, 0) * recip_gamma(gamma_argument(model, n, 0))).real();
  for (int m = 1; m <= table.m_max; ++m) {
    if (std::abs(table.at(n, m)) <= guard) continue;
    const Complex rot(std::cos(2.0 * kPi * m * z), std::sin(2.0 * kPi * m * z));
    const Complex term =
        table.at(n, m) * recip_gamma(gamma_argument(model, n, m)) * rot;
    acc += 2.0 * term.real();
  }
  return acc;
}

DensityValue density_series(const Model& model, const TruncatedSeries& a,
                            const FourierTable& table, double x, int n_terms) {
  if (!(x > 0.0)) throw NonPositiveX("density_series: x must be positive");
  if (n_terms > table.n_max || n_terms > a.order())
    throw OutOfRange("density_series: n_terms exceeds the table/series order");
  const double ln_e = std::log(model.big_e);
  const double z = -std::log(x) / ln_e;  // -log_E x
  DensityValue out;
  for (int n = 0; n <= n_terms; ++n) {
    const double term =
        a[n] * std::pow(x, term_exponent(model, n)) * b_n_eval(table, model, n, z);
    out.value += term;
    out.last_term = std::abs(term);
  }
  return out;
}

double density_quick(const Model& model, const TruncatedSeries& a,
                     const FourierTable& table, double x, int m_terms) {
  if (!(x > 0.0)) throw NonPositiveX("density_quick: x must be positive");
  if (m_terms > table.n_max || m_terms > a.order())
    throw OutOfRange("density_quick: m_terms exceeds the table/series order");
  double acc = 0.0;
  for (int n = 0; n <= m_terms; ++n) {
    const double w =
        table.row_sum(n).real() * a[n] *
        recip_gamma(gamma_argument(model, n, 0)).real();
    acc += w * std::pow(x, term_exponent(model, n));
  }
  return acc;
}

Eigen::ArrayXd density_quick_grid(const Model& model, const TruncatedSeries& a,
                                  const FourierTable& table,
                                  const Eigen::ArrayXd& xs, int m_terms) {
  if (m_terms > table.n_max || m_terms > a.order())
    throw OutOfRange("density_quick_grid: m_terms exceeds the table order");
  if ((xs <= 0.0).any())
    throw NonPositiveX("density_quick_grid: grid must be positive");
  Eigen::ArrayXd weights(m_terms + 1), expos(m_terms + 1);
  for (int n = 0; n <= m_terms; ++n) {
    weights[n] = table.row_sum(n).real() * a[n] *
                 recip_gamma(gamma_argument(model, n, 0)).real();
    expos[n] = term_exponent(model, n);
  }
  const Eigen::ArrayXd lx = xs.log();
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(xs.size());
  for (int n = 0; n <= m_terms; ++n) acc += weights[n] * (expos[n] * lx).exp();
  return acc;
}

}  // namespace gwi
