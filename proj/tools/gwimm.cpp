// gwimm: compute, cross-validate, and export the martingale-limit density
// of a supercritical Galton-Watson process with immigration.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwi/inversion.hpp"
#include "gwi/montecarlo.hpp"
#include "gwi/periodic.hpp"
#include "gwi/series.hpp"
#include "gwi/tail.hpp"

using nlohmann::json;
using namespace gwi;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitValidation = 1;
constexpr int kExitStrictWarning = 2;
constexpr int kExitUsage = 64;

struct GridSpec {
  double x0 = 0.02;
  double x1 = 8.0;
  int count = 400;
};

GridSpec parse_grid(const std::string& spec) {
  GridSpec g;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &g.x0, &g.x1, &g.count) != 3 ||
      !(g.x0 < g.x1) || g.count < 2)
    throw CLI::ValidationError("--grid", "expected x0:x1:count with x0 < x1");
  return g;
}

Eigen::ArrayXd linspace(const GridSpec& g) {
  return Eigen::ArrayXd::LinSpaced(g.count, g.x0, g.x1);
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

struct RunManifest {
  std::string subcommand;
  std::string model_path;
  std::string model_hash;
  json params = json::object();
  std::vector<std::string> outputs;
  double wall_clock_ms = 0.0;

  void write(const std::string& out_path) const {
    json j;
    j["tool"] = "gwimm";
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["model"] = model_path;
    j["model_hash"] = model_hash;
    j["params"] = params;
    j["outputs"] = outputs;
    j["wall_clock_ms"] = wall_clock_ms;
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void write_curve_csv(const std::string& path, const DensityCurve& curve) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "x,p\n";
  char line[64];
  for (Eigen::Index i = 0; i < curve.xs.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", curve.xs[i],
                  curve.ps[i]);
    out << line;
  }
}

// Inversion profile knobs; defaults mirror the reference recipe, --fast is
// the CI-sized variant.
struct Profile {
  double y_max = 2000.0;
  int n_points = 1000000;
  LimitConfig cfg;
};

Profile make_profile(bool paper, bool fast) {
  Profile p;
  if (fast && !paper) {
    p.y_max = 500.0;
    p.n_points = 200000;
  }
  return p;
}

// Warn (or fail under --strict) when the advisory hypotheses behind the
// asymptotic series do not hold for this model.
int hypothesis_warnings(const Model& m, bool strict, bool probed_pi_ok,
                        bool ran_probe) {
  int warnings = 0;
  if (!m.flags.schroder_exp_lt_minus1) {
    std::cerr << "warning: log_E(p1*q0) = " << m.schroder_exponent
              << " >= -1; series hypotheses not all met, computing anyway\n";
    ++warnings;
  }
  if (ran_probe && !probed_pi_ok) {
    std::cerr << "warning: sector probe did not certify an opening past pi\n";
    ++warnings;
  }
  return (warnings > 0 && strict) ? kExitStrictWarning : 0;
}

json model_as_json(const Model& m) {
  json j;
  j["p1"] = m.p1;
  j["q0"] = m.q0;
  j["E"] = m.big_e;
  j["q_mean"] = m.q_mean;
  j["log_E_p1q0"] = m.schroder_exponent;
  return j;
}

struct CommonOpts {
  std::string model_path;
  std::string out_path;
  std::string grid = "0.02:8:400";
  bool paper = false;
  bool fast = false;
  bool strict = false;
  int n_terms = 10;
  int m_max = 8;
  int grid_size = 256;
  std::uint64_t seed = 1;
  std::int64_t paths = 100000;
  int horizon = 30;
};

void add_model_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--model", o.model_path,
                  "model JSON file {\"p\":[...],\"q\":[...]}")
      ->required();
}

int run_density(const CommonOpts& o) {
  Stopwatch clock;
  const Model m = load_model(o.model_path);
  const int rc = hypothesis_warnings(m, o.strict, true, false);
  const Profile prof = make_profile(o.paper, o.fast);
  const GridSpec grid = parse_grid(o.grid);
  DensityCurve curve =
      density_fourier(m, prof.cfg, linspace(grid), prof.y_max, prof.n_points);
  check_curve(curve);
  write_curve_csv(o.out_path, curve);

  RunManifest man;
  man.subcommand = "density";
  man.model_path = o.model_path;
  man.model_hash = file_hash(o.model_path);
  man.params = {{"y_max", prof.y_max},
                {"n_points", prof.n_points},
                {"t_iter", prof.cfg.t_iter},
                {"prod_terms", prof.cfg.prod_terms},
                {"grid", o.grid},
                {"profile", o.fast && !o.paper ? "fast" : "paper"},
                {"model", model_as_json(m)}};
  man.outputs = {o.out_path};
  man.wall_clock_ms = clock.ms();
  man.write(o.out_path + ".manifest.json");
  std::cout << "density: " << curve.xs.size() << " points, mass "
            << curve_mass(curve) << ", " << man.wall_clock_ms << " ms\n";
  return rc;
}

// series and approx share everything but the evaluator.
int run_tail(const CommonOpts& o, bool quick) {
  Stopwatch clock;
  const Model m = load_model(o.model_path);
  const int rc = hypothesis_warnings(m, o.strict, true, false);
  const LimitConfig cfg;
  const GridSpec grid = parse_grid(o.grid);
  if (!(grid.x0 > 0.0)) throw NonPositiveX("grid must start above 0");
  const Eigen::ArrayXd xs = linspace(grid);

  const FourierTable tab =
      fourier_table(m, cfg, std::max(o.n_terms, 1), o.m_max, o.grid_size);
  const TruncatedSeries a = a_coeffs(m, std::max(o.n_terms, 32));

  DensityCurve curve;
  curve.xs = xs;
  curve.ps.resize(xs.size());
  curve.method = quick ? Method::quick : Method::series;
  double worst_last_term = 0.0;
  if (quick) {
    curve.ps = density_quick_grid(m, a, tab, xs, o.n_terms);
  } else {
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      const DensityValue v = density_series(m, a, tab, xs[i], o.n_terms);
      curve.ps[i] = v.value;
      worst_last_term = std::max(worst_last_term, v.last_term);
    }
  }
  write_curve_csv(o.out_path, curve);

  RunManifest man;
  man.subcommand = quick ? "approx" : "series";
  man.model_path = o.model_path;
  man.model_hash = file_hash(o.model_path);
  man.params = {{"n_terms", o.n_terms},
                {"m_max", o.m_max},
                {"table_grid_size", o.grid_size},
                {"grid", o.grid},
                {"model", model_as_json(m)}};
  if (!quick) man.params["max_last_term"] = worst_last_term;
  man.outputs = {o.out_path};
  man.wall_clock_ms = clock.ms();
  man.write(o.out_path + ".manifest.json");
  std::cout << man.subcommand << ": " << xs.size() << " points, "
            << man.wall_clock_ms << " ms\n";
  return rc;
}

int run_coeffs(const CommonOpts& o) {
  Stopwatch clock;
  const Model m = load_model(o.model_path);
  const int rc = hypothesis_warnings(m, o.strict, true, false);
  const int n = std::max(o.n_terms, 32);
  const TruncatedSeries g = phi_inv_coeffs(m, n + 1);
  const TruncatedSeries h = psi_of_phi_inv_coeffs(m, g, n);
  const TruncatedSeries a = a_coeffs(m, n);

  json j;
  j["n_max"] = n;
  j["g"] = std::vector<double>(g.coeffs().data(), g.coeffs().data() + n + 1);
  j["h"] = std::vector<double>(h.coeffs().data(), h.coeffs().data() + n + 1);
  j["a"] = std::vector<double>(a.coeffs().data(), a.coeffs().data() + n + 1);
  std::ofstream out(o.out_path);
  if (!out) throw Error("cannot write " + o.out_path);
  out << j.dump(2) << "\n";

  RunManifest man;
  man.subcommand = "coeffs";
  man.model_path = o.model_path;
  man.model_hash = file_hash(o.model_path);
  man.params = {{"n_max", n}, {"model", model_as_json(m)}};
  man.outputs = {o.out_path};
  man.wall_clock_ms = clock.ms();
  man.write(o.out_path + ".manifest.json");
  return rc;
}

int run_fourier(const CommonOpts& o) {
  Stopwatch clock;
  const Model m = load_model(o.model_path);
  const int rc = hypothesis_warnings(m, o.strict, true, false);
  const LimitConfig cfg;
  const int n_max = std::min(o.n_terms > 0 ? o.n_terms : 16, 64);
  const FourierTable tab = fourier_table(m, cfg, n_max, o.m_max, o.grid_size);

  json rows = json::array();
  for (int n = 0; n <= tab.n_max; ++n)
    for (int mm = -tab.m_max; mm <= tab.m_max; ++mm)
      rows.push_back({{"n", n},
                      {"m", mm},
                      {"re", tab.at(n, mm).real()},
                      {"im", tab.at(n, mm).imag()}});
  json j;
  j["n_max"] = tab.n_max;
  j["m_max"] = tab.m_max;
  j["grid_size"] = tab.grid_size;
  j["theta"] = rows;
  std::ofstream out(o.out_path);
  if (!out) throw Error("cannot write " + o.out_path);
  out << j.dump(2) << "\n";

  RunManifest man;
  man.subcommand = "fourier";
  man.model_path = o.model_path;
  man.model_hash = file_hash(o.model_path);
  man.params = {{"n_max", n_max},
                {"m_max", o.m_max},
                {"grid_size", o.grid_size},
                {"model", model_as_json(m)}};
  man.outputs = {o.out_path};
  man.wall_clock_ms = clock.ms();
  man.write(o.out_path + ".manifest.json");
  return rc;
}

DensityCurve load_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open curve " + path);
  std::string header;
  std::getline(in, header);
  std::vector<double> xs, ps;
  double x, p;
  char comma;
  while (in >> x >> comma >> p) {
    xs.push_back(x);
    ps.push_back(p);
  }
  if (xs.size() < 2) throw Error("curve " + path + " holds fewer than 2 rows");
  DensityCurve curve;
  curve.xs = Eigen::Map<Eigen::ArrayXd>(xs.data(), xs.size());
  curve.ps = Eigen::Map<Eigen::ArrayXd>(ps.data(), ps.size());
  return curve;
}

int run_simulate(const CommonOpts& o, const std::string& against) {
  Stopwatch clock;
  const Model m = load_model(o.model_path);
  const int rc = hypothesis_warnings(m, o.strict, true, false);
  SimConfig sim;
  sim.n_paths = o.paths;
  sim.t_horizon = o.horizon;
  sim.seed = o.seed;
  const Eigen::ArrayXd w = simulate(m, sim);

  std::ofstream out(o.out_path);
  if (!out) throw Error("cannot write " + o.out_path);
  out << "w\n";
  char line[32];
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g\n", w[i]);
    out << line;
  }

  const double mean = w.mean();
  const double var = (w - mean).square().sum() / (w.size() - 1);
  json summary;
  summary["n_paths"] = sim.n_paths;
  summary["t_horizon"] = sim.t_horizon;
  summary["seed"] = sim.seed;
  summary["mean"] = mean;
  summary["variance"] = var;
  if (!against.empty()) {
    summary["ks"] = ks_distance(w, load_curve_csv(against));
    summary["against"] = against;
  }

  const std::string summary_path = o.out_path + ".summary.json";
  std::ofstream sout(summary_path);
  sout << summary.dump(2) << "\n";

  RunManifest man;
  man.subcommand = "simulate";
  man.model_path = o.model_path;
  man.model_hash = file_hash(o.model_path);
  man.params = {{"paths", sim.n_paths},
                {"horizon", sim.t_horizon},
                {"seed", sim.seed},
                {"model", model_as_json(m)}};
  man.outputs = {o.out_path, summary_path};
  man.wall_clock_ms = clock.ms();
  man.write(o.out_path + ".manifest.json");
  std::cout << "simulate: mean " << mean << ", variance " << var;
  if (summary.contains("ks")) std::cout << ", ks " << summary["ks"].dump();
  std::cout << "\n";
  return rc;
}

int run_validate(const CommonOpts& o) {
  const Model m = load_model(o.model_path);
  const LimitConfig cfg;
  std::cout << "model: p1 = " << m.p1 << ", q0 = " << m.q0
            << ", E = " << m.big_e << ", Q'(1) = " << m.q_mean
            << ", log_E(p1 q0) = " << m.schroder_exponent << "\n";

  // functional-equation residual suite
  double worst = 0.0;
  const auto track = [&](double r) { worst = std::max(worst, r); };
  for (const double rr : {0.1, 1.0, 10.0, 100.0}) {
    for (const double aa : {-1.5, -0.7, 0.0, 0.7, 1.5}) {
      const Complex z = rr * Complex(std::cos(aa), std::sin(aa));
      track(std::abs(m.p.eval(pi_eval(m, cfg, z)) -
                     pi_eval(m, cfg, m.big_e * z)));
      track(std::abs(r_eval(m, cfg, m.big_e * z) -
                     r_eval(m, cfg, z) * m.q.eval(pi_eval(m, cfg, z))));
    }
  }
  for (double w = 0.0; w <= 0.6 + 1e-9; w += 0.1) {
    const Complex wc(w);
    track(std::abs(phi_eval(m, cfg, m.p.eval(wc)) -
                   m.p1 * phi_eval(m, cfg, wc)));
    track(std::abs(m.q.eval(wc) * psi_eval(m, cfg, m.p.eval(wc)) -
                   m.q0 * psi_eval(m, cfg, wc)));
  }
  std::cout << "max functional-equation residual: " << worst << "\n";
  if (!(worst < 1e-8)) {
    std::cerr << "validate: residual suite failed\n";
    return kExitValidation;
  }

  std::vector<double> angles;
  for (double a = 0.01; a < 1.5 * std::numbers::pi; a += 0.01)
    angles.push_back(a);
  const CriticalAngleReport rep =
      julia_sector_probe(m, angles, {0.02, 0.05, 0.1}, 3000);
  std::cout << "sector probe: largest fully-inside angle "
            << rep.theta_star_lower << " rad, opening past pi: "
            << (rep.hypothesis_pi_ok ? "yes" : "no") << ", inconclusive "
            << rep.inconclusive << "\n";
  std::cout << "flags: schroder ok, supercritical ok, exponent < -1 "
            << (m.flags.schroder_exp_lt_minus1 ? "yes" : "NO (advisory)")
            << "\n";
  std::cout << "validate: ok\n";
  return hypothesis_warnings(m, o.strict, rep.hypothesis_pi_ok, true);
}

int run_compare(const CommonOpts& o, std::vector<std::string>& methods,
                const std::vector<std::string>& curve_files) {
  Stopwatch clock;
  const Model m = load_model(o.model_path);
  const int rc = hypothesis_warnings(m, o.strict, true, false);
  const std::string model_hash = file_hash(o.model_path);
  const GridSpec grid = parse_grid(o.grid);
  const Eigen::ArrayXd xs = linspace(grid);

  // precomputed curves must come from the same model
  std::vector<std::pair<std::string, Eigen::ArrayXd>> columns;
  for (const std::string& path : curve_files) {
    std::ifstream min(path + ".manifest.json");
    if (!min) throw Error("compare: missing manifest for " + path);
    json man;
    min >> man;
    if (man.value("model_hash", "") != model_hash)
      throw Error("compare: curve " + path + " was built from another model");
    const DensityCurve c = load_curve_csv(path);
    if (c.xs.size() != xs.size() || (c.xs - xs).abs().maxCoeff() > 1e-9)
      throw Error("compare: curve " + path + " uses a different grid");
    columns.emplace_back("p_" + man.value("subcommand", "curve"), c.ps);
  }

  if (methods.empty() && columns.empty()) methods = {"fourier", "quick"};
  const Profile prof = make_profile(o.paper, o.fast);
  const LimitConfig cfg;
  FourierTable tab;
  TruncatedSeries a(0);
  bool have_tab = false;
  for (const std::string& method : methods) {
    if (method == "fourier") {
      columns.emplace_back(
          "p_fourier",
          density_fourier(m, prof.cfg, xs, prof.y_max, prof.n_points).ps);
    } else if (method == "quick" || method == "series") {
      if (!have_tab) {
        tab = fourier_table(m, cfg, std::max(o.n_terms, 10), o.m_max,
                            o.grid_size);
        a = a_coeffs(m, std::max(o.n_terms, 32));
        have_tab = true;
      }
      if (method == "quick") {
        columns.emplace_back("p_quick",
                             density_quick_grid(m, a, tab, xs, o.n_terms));
      } else {
        Eigen::ArrayXd ps(xs.size());
        for (Eigen::Index i = 0; i < xs.size(); ++i)
          ps[i] = density_series(m, a, tab, xs[i], o.n_terms).value;
        columns.emplace_back("p_series", ps);
      }
    } else {
      throw CLI::ValidationError("--methods", "unknown method " + method);
    }
  }
  if (columns.size() < 2)
    throw CLI::ValidationError("--methods", "need at least two columns");

  std::ofstream out(o.out_path);
  if (!out) throw Error("cannot write " + o.out_path);
  out << "x";
  for (const auto& [name, col] : columns) out << "," << name;
  out << "\n";
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    out << xs[i];
    for (const auto& [name, col] : columns) out << "," << col[i];
    out << "\n";
  }

  json sup = json::object();
  double scale = 0.0;
  for (const auto& [name, col] : columns)
    scale = std::max(scale, col.abs().maxCoeff());
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      const double d = (columns[i].second - columns[j].second).abs().maxCoeff();
      const std::string key = columns[i].first + "-" + columns[j].first;
      sup[key] = d;
      std::cout << "sup|" << key << "| = " << d << "  (" << 100.0 * d / scale
                << "% of max)\n";
    }

  RunManifest man;
  man.subcommand = "compare";
  man.model_path = o.model_path;
  man.model_hash = model_hash;
  man.params = {{"grid", o.grid},
                {"methods", methods},
                {"n_terms", o.n_terms},
                {"sup_differences", sup},
                {"model", model_as_json(m)}};
  man.outputs = {o.out_path};
  man.wall_clock_ms = clock.ms();
  man.write(o.out_path + ".manifest.json");
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"martingale-limit density of a Galton-Watson process with "
               "immigration"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOpts o;
  std::vector<std::string> methods;
  std::vector<std::string> curve_files;
  std::string against;

  CLI::App* density = app.add_subcommand(
      "density", "reference density by Fourier inversion (CSV x,p)");
  add_model_flag(density, o);
  density->add_option("--out", o.out_path, "output CSV")->required();
  density->add_option("--grid", o.grid, "x0:x1:count evaluation grid");
  density->add_flag("--paper", o.paper,
                    "reference profile: y_max=2000, n_points=1000000");
  density->add_flag("--fast", o.fast, "CI profile: y_max=500, n_points=200000");
  density->add_flag("--strict", o.strict, "escalate hypothesis warnings");

  CLI::App* series = app.add_subcommand(
      "series", "left-tail asymptotic series density (CSV x,p)");
  add_model_flag(series, o);
  series->add_option("--out", o.out_path, "output CSV")->required();
  series->add_option("--grid", o.grid, "x0:x1:count evaluation grid");
  series->add_option("--n-terms", o.n_terms, "highest n term (default 10)");
  series->add_option("--m-max", o.m_max, "Fourier modes per term (default 8)");
  series->add_flag("--strict", o.strict, "escalate hypothesis warnings");

  CLI::App* approx = app.add_subcommand(
      "approx", "quick zeroth-mode approximation of the density (CSV x,p)");
  add_model_flag(approx, o);
  approx->add_option("--out", o.out_path, "output CSV")->required();
  approx->add_option("--grid", o.grid, "x0:x1:count evaluation grid");
  approx->add_option("--n-terms", o.n_terms, "number of terms M (default 10)");
  approx->add_option("--m-max", o.m_max, "table modes (default 8)");
  approx->add_flag("--strict", o.strict, "escalate hypothesis warnings");

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "dump g (Phi^-1), h (Psi o Phi^-1), and A coefficients");
  add_model_flag(coeffs, o);
  coeffs->add_option("--out", o.out_path, "output JSON")->required();
  coeffs->add_option("--n-terms", o.n_terms, "coefficient order (default 32)");

  CLI::App* fourier = app.add_subcommand(
      "fourier", "dump the theta(n,m) Fourier table as JSON");
  add_model_flag(fourier, o);
  fourier->add_option("--out", o.out_path, "output JSON")->required();
  fourier->add_option("--n-terms", o.n_terms, "rows n (default 16)");
  fourier->add_option("--m-max", o.m_max, "modes |m| (default 8)");
  fourier->add_option("--grid-size", o.grid_size,
                      "samples per period (default 256)");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "sample E^{-t} X_t paths (CSV) plus a JSON summary");
  add_model_flag(simulate, o);
  simulate->add_option("--out", o.out_path, "output CSV")->required();
  simulate->add_option("--paths", o.paths, "number of paths (default 100000)");
  simulate->add_option("--seed", o.seed, "RNG seed (default 1)");
  simulate->add_option("--horizon", o.horizon, "generations (default 30)");
  simulate->add_option("--against", against,
                       "curve CSV to report a KS distance against");

  CLI::App* validate = app.add_subcommand(
      "validate", "check model invariants and functional-equation residuals");
  add_model_flag(validate, o);
  validate->add_flag("--strict", o.strict, "escalate hypothesis warnings");

  CLI::App* compare = app.add_subcommand(
      "compare", "evaluate several methods on one grid and report sup gaps");
  add_model_flag(compare, o);
  compare->add_option("--out", o.out_path, "output CSV")->required();
  compare->add_option("--grid", o.grid, "x0:x1:count evaluation grid");
  compare->add_option("--methods", methods, "fourier,quick,series")
      ->delimiter(',');
  compare->add_option("--curve", curve_files,
                      "previously exported curve CSV (manifest checked)");
  compare->add_option("--n-terms", o.n_terms, "series/quick terms");
  compare->add_flag("--paper", o.paper, "reference inversion profile");
  compare->add_flag("--fast", o.fast, "CI inversion profile");
  compare->add_flag("--strict", o.strict, "escalate hypothesis warnings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (density->parsed()) return run_density(o);
    if (series->parsed()) return run_tail(o, /*quick=*/false);
    if (approx->parsed()) return run_tail(o, /*quick=*/true);
    if (coeffs->parsed()) return run_coeffs(o);
    if (fourier->parsed()) return run_fourier(o);
    if (simulate->parsed()) return run_simulate(o, against);
    if (validate->parsed()) return run_validate(o);
    if (compare->parsed()) return run_compare(o, methods, curve_files);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
