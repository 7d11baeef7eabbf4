#include "gwi/pgf.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gwi {

Pgf::Pgf(Eigen::ArrayXd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) throw NotNormalized("pgf: empty coefficient list");
  for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
    if (!(coeffs_[k] >= 0.0)) {
      std::ostringstream os;
      os << "pgf: coefficient " << k << " is negative (" << coeffs_[k] << ")";
      throw NegativeCoefficient(os.str());
    }
  }
  const double sum = coeffs_.sum();
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    std::ostringstream os;
    os << "pgf: coefficients sum to " << sum << ", expected 1";
    throw NotNormalized(os.str());
  }
  // Drop trailing zeros so degree() reflects the actual support.
  Eigen::Index deg = coeffs_.size() - 1;
  while (deg > 0 && coeffs_[deg] == 0.0) --deg;
  coeffs_.conservativeResize(deg + 1);
}

Complex Pgf::eval(Complex z) const {
  Complex acc = coeffs_[degree()];
  for (int k = degree() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

double Pgf::eval(double x) const {
  double acc = coeffs_[degree()];
  for (int k = degree() - 1; k >= 0; --k) acc = acc * x + coeffs_[k];
  return acc;
}

double Pgf::mean() const {
  double m = 0.0;
  for (int k = 1; k <= degree(); ++k) m += k * coeffs_[k];
  return m;
}

Model validate_model(const Eigen::ArrayXd& p_coeffs,
                     const Eigen::ArrayXd& q_coeffs) {
  Pgf p(p_coeffs);
  Pgf q(q_coeffs);

  const double p0 = p.coeff(0);
  const double p1 = p.coeff(1);
  const double q0 = q.coeff(0);
  const double big_e = p.mean();

  if (p0 != 0.0)
    throw NotSchroder("model: offspring law must have p0 = 0 (Schroder case)");
  if (!(big_e > 1.0))
    throw SubcriticalOrCritical("model: mean offspring E must exceed 1");
  if (!(p1 > 0.0 && p1 < 1.0))
    throw NotSchroder("model: offspring law needs 0 < p1 < 1");
  if (!(q0 > 0.0))
    throw NoImmigrationGap("model: immigration law needs q0 > 0");

  Model m{std::move(p), std::move(q), p1, q0, big_e, 0.0, 0.0, {}};
  m.q_mean = m.q.mean();
  m.schroder_exponent = std::log(p1 * q0) / std::log(big_e);
  m.flags.p1_in_unit_interval = p1 > 0.0 && p1 < 1.0;
  m.flags.p0_zero = p0 == 0.0;
  m.flags.q0_positive = q0 > 0.0;
  m.flags.supercritical = big_e > 1.0;
  m.flags.schroder_exp_lt_minus1 = m.schroder_exponent < -1.0;
  return m;
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path);
  nlohmann::json j;
  in >> j;
  const auto read = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array())
      throw Error("model file " + path + ": missing array \"" + key + "\"");
    const auto& arr = j[key];
    Eigen::ArrayXd c(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) c[i] = arr[i].get<double>();
    return c;
  };
  return validate_model(read("p"), read("q"));
}

Complex iterate_p(const Model& model, Complex z, int t, double escape_radius) {
  Complex w = z;
  for (int i = 0; i < t; ++i) {
    w = model.p.eval(w);
    if (std::abs(w) > escape_radius)
      throw Overflow("iterate_p: iterate escaped after step " +
                     std::to_string(i + 1));
  }
  return w;
}

Eigen::ArrayXd imm_pgf_coeffs(const Model& model, int t, int n_max) {
  if (t < 0) throw Error("imm_pgf_coeffs: t must be >= 0");
  if (n_max < 1) throw Error("imm_pgf_coeffs: n_max must be >= 1");
  const int N = n_max;

  // Multiply a truncated polynomial by P(z); p0 = 0 keeps low-order
  // coefficients exact under truncation.
  const auto& pc = model.p.coeffs();
  const auto& qc = model.q.coeffs();
  const int dp = model.p.degree();
  const int dq = model.q.degree();

  // S(P(z)) truncated at N via Horner over the coefficients of S.
  const auto compose_with_p = [&](const Eigen::ArrayXd& s) {
    Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(N + 1);
    for (int k = static_cast<int>(s.size()) - 1; k >= 0; --k) {
      // acc = acc * P + s_k
      Eigen::ArrayXd next = Eigen::ArrayXd::Zero(N + 1);
      for (int i = 0; i <= N; ++i) {
        if (acc[i] == 0.0) continue;
        for (int j = 1; j <= dp && i + j <= N; ++j)
          next[i + j] += acc[i] * pc[j];
      }
      next[0] += s[k];
      acc.swap(next);
    }
    return acc;
  };

  const auto mul_q = [&](const Eigen::ArrayXd& s) {
    Eigen::ArrayXd out = Eigen::ArrayXd::Zero(N + 1);
    for (int i = 0; i <= N; ++i) {
      if (s[i] == 0.0) continue;
      for (int j = 0; j <= dq && i + j <= N; ++j) out[i + j] += s[i] * qc[j];
    }
    return out;
  };

  Eigen::ArrayXd coeffs = Eigen::ArrayXd::Zero(N + 1);
  if (N >= 1) coeffs[1] = 1.0;  // X_0 = 1
  for (int step = 0; step < t; ++step) coeffs = mul_q(compose_with_p(coeffs));
  return coeffs;
}

}  // namespace gwi
