#include "gwi/limits.hpp"

#include <cmath>
#include <vector>

namespace gwi {

namespace {

// Binomial-sum coefficients c_j = P^(j)(1)/j! of P(1+u) = sum_j c_j u^j.
Eigen::ArrayXd shifted_coeffs(const Pgf& p) {
  const int d = p.degree();
  Eigen::ArrayXd c = Eigen::ArrayXd::Zero(d + 1);
  for (int k = 0; k <= d; ++k) {
    if (p.coeff(k) == 0.0) continue;
    double binom = 1.0;  // C(k, j)
    for (int j = 0; j <= k; ++j) {
      c[j] += p.coeff(k) * binom;
      binom = binom * (k - j) / (j + 1);
    }
  }
  return c;
}

// Multiply truncated series (valuation >= 1 factors) in place helpers.
void mul_trunc(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b,
               Eigen::ArrayXd& out) {
  out.setZero();
  const int n = static_cast<int>(out.size()) - 1;
  for (int i = 1; i <= n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 1; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
}

// Evaluator for Pi built on its Taylor expansion at 0.  Pi is entire for
// polynomial P and the coefficients decay super-geometrically, so the series
// gives full double accuracy for |z| <= 1; larger arguments are reduced via
// Pi(z) = P_s(Pi(z/E^s)).  The raw limit P_t(1 - z/E^t) is unusable at depth
// ~70 in doubles: the 1 - z/E^t seed loses the offset to rounding and the
// repelling factor E^t amplifies that to O(1).
class PiEvaluator {
 public:
  PiEvaluator(const Model& m, const LimitConfig& cfg) : m_(m), cfg_(cfg) {
    ln_e_ = std::log(m.big_e);
    int order = 48;
    while (true) {
      coeffs_ = pi_taylor_coeffs(m, order);
      const double tail = coeffs_.tail(4).abs().maxCoeff();
      if (tail < 1e-20 || order >= 192) break;
      order *= 2;
    }
  }

  Complex eval_small(Complex zeta) const {
    // ascending-power sum with early termination; |zeta| <= ~1
    Complex acc = coeffs_[0];
    Complex pw = 1.0;
    int quiet = 0;
    for (int n = 1; n < coeffs_.size(); ++n) {
      pw *= zeta;
      const Complex term = coeffs_[n] * pw;
      acc += term;
      if (std::abs(term) < 1e-19 * std::max(1.0, std::abs(acc))) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
    return acc;
  }

  int reduction_steps(double az) const {
    if (az <= 1.0) return 0;
    return static_cast<int>(std::ceil(std::log(az) / ln_e_));
  }

  Complex eval(Complex z) const {
    const double az = std::abs(z);
    const int s = reduction_steps(az);
    Complex w = eval_small(z / std::pow(m_.big_e, s));
    for (int i = 0; i < s; ++i) {
      w = m_.p.eval(w);
      if (std::abs(w) > cfg_.escape_radius)
        throw Diverged("pi_eval: iterate escaped; z outside admissible sector");
    }
    return w;
  }

  // R(z) = prod_{t>=1} Q(Pi(z/E^t)), early-stopped per factor.
  Complex r(Complex z) const {
    if (m_.classical()) return 1.0;  // Q == 1: empty product
    Complex acc = 1.0;
    Complex zt = z;
    for (int t = 1; t <= cfg_.prod_terms; ++t) {
      zt /= m_.big_e;
      const Complex f = m_.q.eval(eval(zt));
      acc *= f;
      if (std::abs(f - 1.0) < cfg_.conv_tol) break;
    }
    return acc;
  }

 private:
  const Model& m_;
  LimitConfig cfg_;
  double ln_e_;
  Eigen::ArrayXd coeffs_;
};

}  // namespace

Eigen::ArrayXd pi_taylor_coeffs(const Model& model, int order) {
  const double E = model.big_e;
  const Eigen::ArrayXd c = shifted_coeffs(model.p);
  const int d = model.p.degree();

  Eigen::ArrayXd sig = Eigen::ArrayXd::Zero(order + 1);
  if (order >= 1) sig[1] = -1.0;
  Eigen::ArrayXd pw(order + 1), nxt(order + 1);
  for (int n = 2; n <= order; ++n) {
    // [z^n] sum_{j=2..d} c_j sigma(z)^j, using sig[1..n-1] only.
    pw.setZero();
    for (int i = 1; i < n; ++i) pw[i] = sig[i];
    const Eigen::ArrayXd base = pw;
    double num = 0.0;
    for (int j = 2; j <= d; ++j) {
      mul_trunc(pw, base, nxt);
      pw.swap(nxt);
      num += c[j] * pw[n];
    }
    sig[n] = num / (std::pow(E, n) - E);
  }
  sig[0] = 1.0;
  return sig;
}

Complex pi_eval(const Model& model, const LimitConfig& cfg, Complex z) {
  if (z == 0.0) return 1.0;
  return PiEvaluator(model, cfg).eval(z);
}

Complex r_eval(const Model& model, const LimitConfig& cfg, Complex z) {
  if (z == 0.0 || model.classical()) return 1.0;
  return PiEvaluator(model, cfg).r(z);
}

Complex pi_imm_eval(const Model& model, const LimitConfig& cfg, Complex z) {
  if (z == 0.0) return 1.0;
  PiEvaluator ev(model, cfg);
  return ev.eval(z) * ev.r(z);
}

Complex phi_eval(const Model& model, const LimitConfig& cfg, Complex w) {
  if (w == 0.0) return 0.0;
  Complex u = w;
  double scale = 1.0;
  Complex v_prev = w;
  for (int t = 1; t <= cfg.t_iter; ++t) {
    u = model.p.eval(u);
    scale /= model.p1;
    if (std::abs(u) > cfg.escape_radius)
      throw NotInBasin("phi_eval: iterate escaped the filled Julia set");
    const Complex v = u * scale;
    if (std::abs(v - v_prev) <= cfg.conv_tol * std::abs(v)) return v;
    v_prev = v;
  }
  // Depth cap reached: accept if the orbit has demonstrably contracted into
  // the certified core |u| < 1/2 (P maps it into itself), otherwise the
  // point is operationally outside.
  if (std::abs(u) < 0.5) return v_prev;
  throw NotInBasin("phi_eval: no contraction within t_iter steps");
}

Complex psi_eval(const Model& model, const LimitConfig& cfg, Complex w) {
  Complex acc = 1.0;
  Complex u = w;
  for (int t = 0; t <= cfg.prod_terms; ++t) {
    const Complex f = model.q.eval(u) / model.q0;
    acc *= f;
    if (std::abs(f - 1.0) < cfg.conv_tol) return acc;
    u = model.p.eval(u);
    if (std::abs(u) > cfg.escape_radius)
      throw NotInBasin("psi_eval: iterate escaped the filled Julia set");
  }
  if (std::abs(u) < 0.5) return acc;
  throw NotInBasin("psi_eval: no contraction within prod_terms steps");
}

Eigen::ArrayXcd pi_imm_on_imag_axis(const Model& model, const LimitConfig& cfg,
                                    const Eigen::ArrayXd& ys) {
  const PiEvaluator ev(model, cfg);
  const Eigen::Index n = ys.size();
  Eigen::ArrayXcd out(n);
  // |Pi_imm| <= 1 on the imaginary axis so evaluation cannot escape, but an
  // exception must still not cross the parallel region.
  bool failed = false;
#pragma omp parallel for schedule(static) reduction(|| : failed)
  for (Eigen::Index i = 0; i < n; ++i) {
    try {
      const Complex z(0.0, ys[i]);
      out[i] = (ys[i] == 0.0) ? Complex(1.0) : ev.eval(z) * ev.r(z);
    } catch (const Error&) {
      failed = true;
    }
  }
  if (failed)
    throw Diverged("pi_imm_on_imag_axis: evaluation escaped on the grid");
  return out;
}

}  // namespace gwi
