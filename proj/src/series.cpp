#include "gwi/series.hpp"

#include <cmath>

namespace gwi {

Complex TruncatedSeries::eval(Complex z) const {
  Complex acc = c_[order()];
  for (int n = order() - 1; n >= 0; --n) acc = acc * z + c_[n];
  return acc;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_compose(const TruncatedSeries& a,
                               const TruncatedSeries& b) {
  if (b[0] != 0.0)
    throw CompositionNeedsZeroConstant(
        "series_compose: inner series must have zero constant term");
  // The inner truncation governs the result order; coefficients beyond
  // a.order() of the outer series are assumed zero (exact for polynomials).
  const int n = b.order();
  TruncatedSeries acc(n);
  for (int k = a.order(); k >= 0; --k) {
    TruncatedSeries next(n);
    for (int i = 0; i <= n; ++i) {
      if (acc[i] == 0.0) continue;
      for (int j = 1; i + j <= n; ++j) next[i + j] += acc[i] * b[j];
    }
    next[0] += a[k];
    acc = std::move(next);
  }
  return acc;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0.0)
    throw DivisionByZeroConstant(
        "series_reciprocal: constant term must be nonzero");
  const int n = a.order();
  TruncatedSeries out(n);
  out[0] = 1.0 / a[0];
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += a[j] * out[k - j];
    out[k] = -s / a[0];
  }
  return out;
}

TruncatedSeries series_reversion(const TruncatedSeries& a) {
  if (a[0] != 0.0 || a.order() < 1 || a[1] == 0.0)
    throw Error("series_reversion: need a[0] == 0 and a[1] != 0");
  const int n = a.order();
  TruncatedSeries b(n);
  b[1] = 1.0 / a[1];
  // Solve [z^k] a(b(z)) = delta_{k,1} order by order; the unknown b_k only
  // enters through the linear term a_1 b_k.
  for (int k = 2; k <= n; ++k) {
    // evaluate a(b) to order k with the current b (b_k still 0)
    TruncatedSeries comp = series_compose(
        TruncatedSeries(a.coeffs().head(k + 1).eval()),
        TruncatedSeries(b.coeffs().head(k + 1).eval()));
    b[k] = -comp[k] / a[1];
  }
  return b;
}

TruncatedSeries phi_inv_coeffs(const Model& model, int n_max) {
  const double p1 = model.p1;
  const int d = model.p.degree();
  TruncatedSeries g(n_max);
  if (n_max >= 1) g[1] = 1.0;
  Eigen::ArrayXd pw(n_max + 1), base(n_max + 1), nxt(n_max + 1);
  for (int n = 2; n <= n_max; ++n) {
    // g_n (p1^n - p1) = [z^n] sum_{k>=2} p_k G(z)^k with G using g_1..g_{n-1}
    base.setZero();
    for (int i = 1; i < n; ++i) base[i] = g[i];
    pw = base;
    double num = 0.0;
    for (int k = 2; k <= d; ++k) {
      nxt.setZero();
      for (int i = 1; i < n; ++i) {
        if (pw[i] == 0.0) continue;
        for (int j = 1; i + j <= n; ++j) nxt[i + j] += pw[i] * base[j];
      }
      pw.swap(nxt);
      num += model.p.coeff(k) * pw[n];
    }
    g[n] = num / (std::pow(p1, n) - p1);
  }
  return g;
}

TruncatedSeries psi_of_phi_inv_coeffs(const Model& model,
                                      const TruncatedSeries& g, int n_max) {
  const double p1 = model.p1;
  const double q0 = model.q0;
  // c = Q(G(z)) truncated; G has zero constant term so this is exact.
  TruncatedSeries qser(model.q.coeffs());
  TruncatedSeries gn(g.coeffs().head(n_max + 1).eval());
  TruncatedSeries c = series_compose(qser, gn);

  TruncatedSeries h(n_max);
  h[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    double s = 0.0;
    for (int j = 1; j <= n; ++j)
      s += (j <= c.order() ? c[j] : 0.0) * h[n - j] * std::pow(p1, n - j);
    h[n] = s / (q0 * (1.0 - std::pow(p1, n)));
  }
  return h;
}

TruncatedSeries a_coeffs(const Model& model, int n_max) {
  // A(z) = (G(z)/z) / H(z) with G = Phi^{-1}, H = Psi o Phi^{-1}.
  TruncatedSeries g = phi_inv_coeffs(model, n_max + 1);
  TruncatedSeries h = psi_of_phi_inv_coeffs(model, g, n_max);
  TruncatedSeries g_over_z(n_max);
  for (int k = 0; k <= n_max; ++k) g_over_z[k] = g[k + 1];
  return series_mul(g_over_z, series_reciprocal(h));
}

}  // namespace gwi
