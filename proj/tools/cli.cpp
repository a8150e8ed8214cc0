#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "multlab/curves_oscillatory.hpp"
#include "multlab/detail/rng.hpp"
#include "multlab/errors.hpp"
#include "multlab/grid_spaces.hpp"
#include "multlab/growth_lab.hpp"
#include "multlab/interpolation_norms.hpp"
#include "multlab/special_functions.hpp"
#include "multlab/spherical_rough.hpp"

namespace multlab::cli {

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
using complex = std::complex<double>;

// Typed access to the "params" object. Every lookup records the value it
// resolved, and finish() rejects keys nobody asked for.
class Params {
 public:
  explicit Params(const Json& j) : j_(j) {
    if (!j_.is_object()) {
      throw ConfigError("params", "expected an object");
    }
  }

  double number(const std::string& key, double def, double lo, double hi) {
    double v = def;
    if (const auto* node = find(key)) {
      v = to_number(*node, key);
    }
    check_range(key, v, lo, hi);
    resolved_[key] = encode(v);
    return v;
  }

  long long integer(const std::string& key, long long def, long long lo, long long hi) {
    long long v = def;
    if (const auto* node = find(key)) {
      if (!node->is_number_integer()) {
        throw ConfigError(field(key), "expected an integer");
      }
      v = node->get<long long>();
    }
    if (v < lo || v > hi) {
      throw ConfigError(field(key), "must lie in [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "], got " + std::to_string(v));
    }
    resolved_[key] = v;
    return v;
  }

  // A number or a non-empty array of numbers.
  std::vector<double> numbers(const std::string& key, std::vector<double> def, double lo,
                              double hi) {
    std::vector<double> v = std::move(def);
    if (const auto* node = find(key)) {
      v.clear();
      if (node->is_array()) {
        for (const auto& x : *node) {
          v.push_back(to_number(x, key));
        }
      } else {
        v.push_back(to_number(*node, key));
      }
      if (v.empty()) {
        throw ConfigError(field(key), "expected at least one value");
      }
    }
    Json out = Json::array();
    for (double x : v) {
      check_range(key, x, lo, hi);
      out.push_back(encode(x));
    }
    resolved_[key] = out;
    return v;
  }

  std::string choice(const std::string& key, const std::string& def,
                     const std::vector<std::string>& allowed) {
    std::string v = def;
    if (const auto* node = find(key)) {
      if (!node->is_string()) {
        throw ConfigError(field(key), "expected a string");
      }
      v = node->get<std::string>();
    }
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) {
        list += (list.empty() ? "" : ", ") + a;
      }
      throw ConfigError(field(key), "must be one of {" + list + "}, got \"" + v + "\"");
    }
    resolved_[key] = v;
    return v;
  }

  Json finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!resolved_.contains(it.key())) {
        throw ConfigError(field(it.key()), "unknown parameter");
      }
    }
    return resolved_;
  }

 private:
  static std::string field(const std::string& key) { return "params." + key; }

  const Json* find(const std::string& key) const {
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  static double to_number(const Json& node, const std::string& key) {
    if (node.is_number()) {
      return node.get<double>();
    }
    if (node.is_string()) {
      const auto s = node.get<std::string>();
      if (s == "inf") {
        return kInf;
      }
    }
    throw ConfigError(field(key), "expected a number (or \"inf\")");
  }

  static Json encode(double v) { return std::isinf(v) ? Json("inf") : Json(v); }

  static void check_range(const std::string& key, double v, double lo, double hi) {
    if (std::isnan(v) || v < lo || v > hi) {
      throw ConfigError(field(key), "value " + format_number(v) + " outside [" +
                                        format_number(lo) + ", " + format_number(hi) + "]");
    }
  }

  const Json& j_;
  Json resolved_ = Json::object();
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  }
  return out;
}

std::vector<double> logspace(double a, double b, int n) {
  auto v = linspace(std::log(a), std::log(b), n);
  for (auto& x : v) {
    x = std::exp(x);
  }
  return v;
}

Cell yes_no(bool b) { return std::string(b ? "yes" : "no"); }

Json bound_json(const growth::GrowthBound& b) { return {{"A", b.A}, {"c", b.c}, {"s", b.s}}; }

// --- shared symbol / weight families --------------------------------------------------

grid::Symbol make_symbol(const std::string& kind, std::size_t n, double slope,
                         std::optional<std::uint64_t> seed) {
  std::vector<complex> m(n);
  if (kind == "sawtooth") {
    for (std::size_t k = 0; k < n; ++k) {
      m[k] = std::fmod(slope * static_cast<double>(grid::fft_frequency(k, n)) + 100.0 * kPi,
                       2.0 * kPi);
    }
  } else if (kind == "cosine") {
    for (std::size_t k = 0; k < n; ++k) {
      m[k] = std::cos(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
    }
  } else {
    auto rng = detail::task_rng(*seed, 0);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (auto& v : m) {
      v = uni(rng);
    }
  }
  return grid::Symbol::from_samples(std::move(m));
}

grid::Weight make_weight(const std::string& kind, std::size_t n, double ratio, double exponent) {
  if (kind == "unit") {
    return grid::Weight::unit();
  }
  std::vector<double> w(n, 1.0);
  if (kind == "two-valued") {
    std::fill(w.begin() + static_cast<std::ptrdiff_t>(n / 2), w.end(), ratio);
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = std::pow(1.0 + std::abs(static_cast<double>(grid::fft_frequency(k, n))), exponent);
    }
  }
  return grid::Weight({n}, std::move(w));
}

double five_point_laplacian(double s, double x, double y, double h) {
  const special::MajorantParameter sp(s);
  auto f = [&](double a, double b) { return special::poisson_majorant(sp, a, b); };
  return (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
}

double hilbert_kernel(double x, double y) { return 1.0 / (x - y); }
double sine_phase(double x, double y) { return std::sin(x - y); }

double sgn(double u) { return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0); }

curves::CurveSpec model_curve() {
  return {{[](double u) { return sgn(u) * std::min(std::abs(u), 1.0); }},
          [](double u) { return 1.0 / u; },
          0.5,
          {1.0}};
}

// --- experiments ------------------------------------------------------------------------

using Seed = std::optional<std::uint64_t>;

void exp_psi_majorant(Params& p, Seed, Result& r) {
  const auto s_list = p.numbers("s", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99},
                                1e-6, 1.0 - 1e-6);
  const double h = p.number("laplacian_step", 1e-3, 1e-6, 0.1);
  r.params = p.finish();
  Table t{"",
          {"s", "psi_1_0", "inv_cos", "abs_error", "one_minus_s_psi", "phi_prime_1", "s_over_cos",
           "max_laplacian", "min_margin"},
          {}};
  for (double s : s_list) {
    const special::MajorantParameter sp(s);
    const auto mc = special::majorant_constants(sp);
    const double psi = special::poisson_majorant(sp, 1.0, 0.0);
    const double inv_cos = 1.0 / std::cos(0.5 * kPi * s);
    double lap = 0.0, margin = kInf;
    for (double x : {0.5, 1.0, 2.0}) {
      for (double y : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
        lap = std::max(lap, std::abs(five_point_laplacian(s, x, y, h)));
      }
    }
    for (double x : {0.01, 0.1, 0.5, 1.0, 4.0}) {
      for (double y : {-10.0, -3.0, -1.0, -0.2, 0.0, 0.2, 1.0, 3.0, 10.0}) {
        margin = std::min(margin, special::poisson_majorant(sp, x, y) - std::pow(std::abs(y), s));
      }
    }
    t.rows.push_back({s, psi, inv_cos, std::abs(psi - inv_cos), (1.0 - s) * psi,
                      mc.phi_prime_at_1, s * inv_cos, lap, margin});
  }
  r.tables.push_back(std::move(t));
}

void exp_extremal(Params& p, Seed, Result& r) {
  const double lo = p.number("M_min", 1e-4, 1e-12, 1e12);
  const double hi = p.number("M_max", 1e4, lo, 1e12);
  const auto n = p.integer("points", 100, 1, 100000);
  r.params = p.finish();
  Table t{"", {"M", "value", "argmin"}, {}};
  for (double M : logspace(lo, hi, static_cast<int>(n))) {
    const auto e = special::extremal_infimum(M);
    t.rows.push_back({M, e.value, e.argmin});
  }
  r.tables.push_back(std::move(t));
}

void exp_interp_limits(Params& p, Seed, Result& r) {
  const auto lambdas = p.numbers("lambda", {7.0}, 1e-12, 1e12);
  r.params = p.finish();
  Table t{"", {"lambda", "lim_h_over_theta", "lim_H", "lim_h2_over_theta", "lim_H2"}, {}};
  for (double lambda : lambdas) {
    const auto e = interp::endpoint_limits(lambda);
    t.rows.push_back({lambda, e.h_over_theta, e.H, e.h2_over_theta, e.H2});
    if (lambdas.size() == 1) {
      r.summary = {{"lim_h_over_theta", e.h_over_theta},
                   {"lim_H", e.H},
                   {"lim_h2_over_theta", e.h2_over_theta},
                   {"lim_H2", e.H2}};
    }
  }
  r.tables.push_back(std::move(t));
}

void exp_interp_grid(Params& p, Seed, Result& r) {
  const auto lambdas = p.numbers("lambda", logspace(1e-3, 1e3, 10), 1e-12, 1e12);
  const auto thetas = p.numbers("theta", linspace(0.05, 0.95, 10), 1e-9, 1.0 - 1e-9);
  r.params = p.finish();
  Table t{"",
          {"lambda", "theta", "h", "H", "h2", "H2", "lambda_theta", "two_theta_lambda_theta",
           "embedding_ok"},
          {}};
  bool all_ok = true;
  for (double lambda : lambdas) {
    for (double theta : thetas) {
      const interp::CoupleParams cp(theta, lambda);
      using K = interp::SchechterKind;
      const double h = interp::schechter_norm(cp, K::lower_h);
      const double H = interp::schechter_norm(cp, K::upper_H);
      const double lt = std::pow(lambda, theta);
      const bool ok = lt <= H * (1.0 + 1e-12) && h <= 2.0 * theta * lt * (1.0 + 1e-12);
      all_ok = all_ok && ok;
      t.rows.push_back({lambda, theta, h, H, interp::schechter_norm(cp, K::lower_h2),
                        interp::schechter_norm(cp, K::upper_H2), lt, 2.0 * theta * lt, yes_no(ok)});
    }
  }
  r.summary = {{"embedding_ok", all_ok}};
  r.tables.push_back(std::move(t));
}

void exp_mult_norm(Params& p, Seed seed, Result& r) {
  const auto symbol = p.choice("symbol", "sawtooth", {"sawtooth", "cosine", "random-real"});
  const auto n = static_cast<std::size_t>(p.integer("size", 256, 2, 1 << 16));
  const double slope = p.number("slope", 0.37, -1e6, 1e6);
  const auto p_list = p.numbers("p", {1.0, 1.5, 2.0, 3.0, kInf}, 1.0, kInf);
  const auto weight = p.choice("weight", "two-valued", {"unit", "two-valued", "power"});
  const double ratio = p.number("weight_ratio", 4.0, 1e-12, 1e12);
  const double exponent = p.number("weight_exponent", 0.5, -0.99, 0.99);
  r.params = p.finish();
  const auto m = growth::unimodular_symbol(make_symbol(symbol, n, slope, seed), 1.0);
  const auto w = make_weight(weight, n, ratio, exponent);
  grid::NormBudget budget;
  budget.seed = *seed;
  Table t{"", {"p", "value", "kind", "converged", "witness_ok"}, {}};
  for (double q : p_list) {
    const auto est = grid::multiplier_norm(m, q, w, budget);
    t.rows.push_back({q, est.value, grid::to_string(est.kind), yes_no(est.converged),
                      yes_no(grid::verify_witness(m, q, w, est))});
  }
  if (!w.is_unit()) {
    r.summary["a2_characteristic"] = grid::ap_characteristic(w, 2.0);
  }
  r.tables.push_back(std::move(t));
}

void exp_growth_curve(Params& p, Seed seed, Result& r) {
  const auto symbol = p.choice("symbol", "sawtooth", {"sawtooth", "cosine", "random-real"});
  const auto n = static_cast<std::size_t>(p.integer("size", 256, 2, 1 << 16));
  const double slope = p.number("slope", 0.05, -1e6, 1e6);
  const double q = p.number("p", 2.0, 1.0, kInf);
  const auto weight = p.choice("weight", "power", {"unit", "two-valued", "power"});
  const double ratio = p.number("weight_ratio", 4.0, 1e-12, 1e12);
  const double exponent = p.number("weight_exponent", 0.9, -0.99, 0.99);
  const auto t_grid = p.numbers("t", linspace(1.0, 16.0, 16), 0.0, 1e6);
  r.params = p.finish();
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw ConfigError("params.t", "must be strictly increasing");
    }
  }
  const auto m = make_symbol(symbol, n, slope, seed);
  const auto w = make_weight(weight, n, ratio, exponent);
  grid::NormBudget budget;
  budget.seed = *seed;
  const auto curve = growth::growth_curve(m, q, w, t_grid, budget);
  Table t{"", {"t", "norm", "kind", "witness_ok"}, {}};
  for (const auto& s : curve.samples) {
    const auto mt = growth::unimodular_symbol(m, s.t);
    t.rows.push_back({s.t, s.estimate.value, grid::to_string(s.estimate.kind),
                      yes_no(grid::verify_witness(mt, q, w, s.estimate))});
  }
  r.summary["envelope"] = bound_json(growth::fit_exponential_power(curve, growth::FitMode::envelope));
  r.summary["lsq"] = bound_json(growth::fit_exponential_power(curve, growth::FitMode::lsq));
  r.tables.push_back(std::move(t));
}

void exp_growth_fit(Params& p, Seed, Result& r) {
  const double A = p.number("A", 2.0, 1e-12, 1e12);
  const double c = p.number("c", 0.5, 1e-9, 1e3);
  const double s = p.number("s", 0.7, 1e-3, 1.0);
  const auto n = p.integer("points", 20, 3, 100000);
  const double t0 = p.number("t_min", 1.0, 1e-9, 1e6);
  const double t1 = p.number("t_max", 20.0, t0, 1e6);
  r.params = p.finish();
  const auto t = linspace(t0, t1, static_cast<int>(n));
  std::vector<double> N;
  Table tab{"", {"t", "N"}, {}};
  for (double x : t) {
    N.push_back(A * std::exp(c * std::pow(x, s)));
    tab.rows.push_back({x, N.back()});
  }
  r.summary["envelope"] = bound_json(growth::fit_exponential_power(t, N, growth::FitMode::envelope));
  r.summary["lsq"] = bound_json(growth::fit_exponential_power(t, N, growth::FitMode::lsq));
  r.tables.push_back(std::move(tab));
}

void exp_growth_converse(Params& p, Seed seed, Result& r) {
  const auto trials = p.integer("trials", 50, 1, 100000);
  const auto n = static_cast<std::size_t>(p.integer("size", 32, 2, 4096));
  const auto t_list = p.numbers("t", {0.5, 1.0, 2.0, 5.0}, -1e3, 1e3);
  r.params = p.finish();
  Table t{"", {"trial", "t", "N1_m", "norm", "bound", "ok"}, {}};
  bool all_ok = true;
  double worst = 0.0;
  for (long long k = 0; k < trials; ++k) {
    auto rng = detail::task_rng(*seed, static_cast<std::uint64_t>(k));
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<complex> m(n);
    for (auto& v : m) {
      v = uni(rng);
    }
    const auto sym = grid::Symbol::from_samples(std::move(m));
    const double N1 = grid::multiplier_norm(sym, 1.0).value;
    for (double tt : t_list) {
      const double nt = grid::multiplier_norm(growth::unimodular_symbol(sym, tt), 1.0).value;
      const double bound = std::exp(std::abs(tt) * N1);
      const bool ok = nt <= bound * (1.0 + 1e-12);
      all_ok = all_ok && ok;
      worst = std::max(worst, nt / bound);
      t.rows.push_back({static_cast<double>(k), tt, N1, nt, bound, yes_no(ok)});
    }
  }
  r.summary = {{"all_ok", all_ok}, {"max_ratio", worst}};
  r.tables.push_back(std::move(t));
}

void exp_cosine_identity(Params& p, Seed, Result& r) {
  const auto k_max = p.integer("k_max", 12, 0, 60);
  const auto samples = p.integer("samples", 257, 2, 1000000);
  r.params = p.finish();
  Table t{"", {"k", "max_abs_error"}, {}};
  for (long long k = 0; k <= k_max; ++k) {
    const auto terms = growth::cosine_power_expand(static_cast<int>(k));
    double err = 0.0;
    for (double x : linspace(-kPi, kPi, static_cast<int>(samples))) {
      err = std::max(err, std::abs(growth::evaluate_cosine_expansion(terms, x) -
                                   std::pow(std::cos(x), static_cast<double>(k))));
    }
    t.rows.push_back({static_cast<double>(k), err});
  }
  r.tables.push_back(std::move(t));
}

void exp_sphere_gamma(Params& p, Seed, Result& r) {
  const auto j_max = p.integer("j_max", 200, 1, 100000);
  r.params = p.finish();
  Table t{"", {"n", "j", "gamma", "closed_form", "gamma_times_j_pow"}, {}};
  for (int n : {2, 4}) {
    double lo = kInf, hi = 0.0;
    for (long long j = 1; j <= j_max; ++j) {
      const double jd = static_cast<double>(j);
      const double g = sphere::gamma_coefficient(static_cast<int>(j), n);
      const double closed = n == 2 ? 2.0 * kPi / jd : 4.0 * kPi * kPi / (jd * (jd + 2.0));
      const double scaled = g * std::pow(jd, 0.5 * n);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
      t.rows.push_back({static_cast<double>(n), jd, g, closed, scaled});
    }
    r.summary["n" + std::to_string(n)] = {{"min_scaled", lo}, {"max_scaled", hi}};
  }
  r.tables.push_back(std::move(t));
}

void exp_sphere_growth(Params& p, Seed, Result& r) {
  const auto coeffs = p.numbers("coefficients", {0.0, 0.6, 0.0, 0.8}, -1e6, 1e6);
  const auto t_grid = p.numbers("t", linspace(1.0, 20.0, 20), 0.0, 1e4);
  sphere::SphereGrowthOptions opt;
  opt.grid_size = static_cast<std::size_t>(p.integer("grid_size", 4096, 8, 1 << 18));
  opt.work_degree = static_cast<std::size_t>(p.integer("work_degree", 1024, 1, 1 << 16));
  r.params = p.finish();
  if (coeffs[0] != 0.0) {
    throw ConfigError("params.coefficients", "the degree-0 coefficient must vanish");
  }
  const auto m = sphere::normalized(
      sphere::ZonalExpansion(4, std::vector<complex>(coeffs.begin(), coeffs.end())));
  const auto table = sphere::unimodular_sphere_growth(m, t_grid, opt);
  Table t{"", {"t", "norm", "tail_fraction", "leibniz_residual"}, {}};
  for (const auto& row : table.rows) {
    t.rows.push_back({row.t, row.norm, row.tail_fraction, sphere::leibniz_residual(m, row.t, opt)});
  }
  r.summary = {{"exponent", table.exponent}};
  r.tables.push_back(std::move(t));
}

void exp_counterexample(Params& p, Seed, Result& r) {
  const auto J = p.integer("J", 1000000, 1, 100000000);
  const double alpha = p.number("alpha", 0.0, 0.0, 1.0 - 1e-9);
  const auto t_list = p.numbers("t", linspace(0.0, 10.0, 21), -100.0, 100.0);
  const auto R_list = p.numbers("R", {1.0, std::exp(1.0), 1e3}, 1.0, 1e300);
  r.params = p.finish();
  Table t{"", {"t", "l1_exact", "l1_l2_bound", "ratio_to_exp"}, {}};
  double lo = kInf, hi = 0.0;
  for (double tt : t_list) {
    const auto c = curves::counterexample_norms(
        curves::CounterexampleParams(J, special::HalfPlanePoint(alpha, tt)));
    const double ratio = c.l1_exact / std::exp(0.5 * kPi * std::abs(tt));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    t.rows.push_back({tt, c.l1_exact, c.l1_l2_bound, ratio});
  }
  Table u{"unboundedness", {"R", "l1", "log_R"}, {}};
  for (const auto& row : curves::counterexample_unboundedness(R_list)) {
    u.rows.push_back({row.R, row.l1, std::log(row.R)});
  }
  r.summary = {{"ratio_min", lo}, {"ratio_max", hi}};
  r.tables.push_back(std::move(t));
  r.tables.push_back(std::move(u));
}

void exp_divergence_witness(Params& p, Seed, Result& r) {
  const auto eps = p.numbers("eps", {0.5, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}, 1e-12, 1.0 - 1e-12);
  const auto xi = p.numbers("xi", {0.5, 1.0, 2.0, 4.0}, -1e6, 1e6);
  r.params = p.finish();
  std::vector<std::vector<double>> xi_grid;
  for (double x : xi) {
    xi_grid.push_back({x});
  }
  Table t{"", {"eps", "I", "exact_I", "I_without_eps_term", "S"}, {}};
  double worst = 0.0;
  for (const auto& row : curves::divergence_witness(model_curve(), 0, eps, xi_grid)) {
    const double exact = 2.0 * (1.0 - row.eps + std::log(1.0 / row.eps));
    worst = std::max(worst, std::abs(row.I - exact));
    t.rows.push_back({row.eps, row.I, exact, 2.0 * (1.0 + std::log(1.0 / row.eps)), row.S});
  }
  r.summary = {{"max_abs_error", worst}};
  r.tables.push_back(std::move(t));
}

void exp_curve_symbol(Params& p, Seed, Result& r) {
  const double eps = p.number("eps", 1e-4, 1e-8, 1.0 - 1e-12);
  const auto xi = p.numbers("xi", {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}, -1e4, 1e4);
  r.params = p.finish();
  const curves::CurveSpec c{{[](double u) { return u; }}, [](double u) { return 1.0 / u; }, eps, {}};
  Table t{"", {"xi", "re", "im", "quadrature_error", "hilbert_im"}, {}};
  for (double x : xi) {
    const auto v = curves::curve_symbol(c, {x});
    t.rows.push_back({x, v.value.real(), v.value.imag(), v.error, kPi * sgn(x)});
  }
  r.tables.push_back(std::move(t));
}

void exp_moment_growth(Params& p, Seed, Result& r) {
  const auto N = static_cast<std::size_t>(p.integer("N", 512, 2, curves::kMaxDenseGrid));
  const auto n_max = p.integer("n_max", 8, 1, 64);
  r.params = p.finish();
  const auto g = curves::moment_growth(hilbert_kernel, sine_phase, static_cast<int>(n_max), N);
  Table t{"", {"n", "norm", "norm_root"}, {}};
  for (std::size_t i = 0; i < g.norms.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    t.rows.push_back({n, g.norms[i], std::pow(g.norms[i], 1.0 / n)});
  }
  r.summary = {{"base_fit", g.base_fit}, {"base_sup", g.base_sup}};
  r.tables.push_back(std::move(t));
}

void exp_taylor_consistency(Params& p, Seed, Result& r) {
  const auto N = static_cast<std::size_t>(p.integer("N", 512, 2, curves::kMaxDenseGrid));
  const auto order = p.integer("order", 12, 0, 60);
  const auto t_list = p.numbers("t", {-1.0, -0.5, 0.5, 1.0}, -10.0, 10.0);
  r.params = p.finish();
  Table t{"",
          {"t", "difference", "remainder", "abs_kernel", "roundoff", "bound", "holds",
           "literal_remainder_holds"},
          {}};
  bool all = true;
  for (double tt : t_list) {
    const auto c = curves::taylor_consistency(hilbert_kernel, sine_phase, tt,
                                              static_cast<int>(order), N);
    all = all && c.holds();
    t.rows.push_back({tt, c.difference, c.remainder, c.abs_kernel, c.roundoff,
                      (c.remainder + c.roundoff) * c.abs_kernel, yes_no(c.holds()),
                      yes_no(c.difference <= c.remainder)});
  }
  r.summary = {{"all_hold", all}};
  r.tables.push_back(std::move(t));
}

void exp_phase_removal(Params& p, Seed, Result& r) {
  const auto N = static_cast<std::size_t>(p.integer("N", 128, 2, curves::kMaxDenseGrid));
  const auto n_max = p.integer("n_max", 4, 1, 32);
  r.params = p.finish();
  const auto pr = curves::phase_removal_check(hilbert_kernel, sine_phase, static_cast<int>(n_max), N);
  Table t{"", {"n", "norm", "bound", "ok"}, {}};
  for (const auto& row : pr.rows) {
    t.rows.push_back({static_cast<double>(row.n), row.norm, row.bound, yes_no(row.norm <= row.bound)});
  }
  r.summary = {{"A", pr.A}, {"D", pr.D}};
  r.tables.push_back(std::move(t));
}

using ExperimentFn = std::function<void(Params&, Seed, Result&)>;

struct Entry {
  ExperimentInfo info;
  ExperimentFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {{"psi-majorant", "psi", false, "harmonic majorant psi_s: closed form, harmonicity, |y|^s margin"},
       exp_psi_majorant},
      {{"extremal", "psi", false, "inf_a |1+a| + sqrt((1+a)^2 + M a^2) on a log-M grid"}, exp_extremal},
      {{"interp-limits", "interp", false, "theta -> 0 limits of h/theta, H, h2/theta, H2"},
       exp_interp_limits},
      {{"interp-grid", "interp", false, "h, H, h2, H2 and the embedding chain on a (lambda, theta) grid"},
       exp_interp_grid},
      {{"mult-norm", "mult-norm", true, "multiplier norms of e^{im} across p with a weight"},
       exp_mult_norm},
      {{"growth-curve", "growth", true, "weighted growth curve ||e^{itm}|| and its exponential-power fit"},
       exp_growth_curve},
      {{"growth-fit", "growth", false, "fit recovery on synthetic A exp(c t^s) data"}, exp_growth_fit},
      {{"growth-converse", "growth", true, "||e^{itm}||_1 <= exp(|t| ||m||_1) on random real symbols"},
       exp_growth_converse},
      {{"cosine-identity", "growth", false, "(cos x)^k against its cosine expansion"},
       exp_cosine_identity},
      {{"sphere-gamma", "spherical", false, "gamma_j for n = 2, 4 and the scaled bracket"},
       exp_sphere_gamma},
      {{"sphere-growth", "spherical", false, "||Delta(e^{itm} - mean)|| on S^3 and the Leibniz residual"},
       exp_sphere_growth},
      {{"counterexample", "counterexample", false, "dyadic counterexample norms and log R divergence"},
       exp_counterexample},
      {{"divergence-witness", "curves", false, "I(eps) and sup |m| for the bounded model curve"},
       exp_divergence_witness},
      {{"curve-symbol", "curves", false, "truncated Hilbert symbol along the line"}, exp_curve_symbol},
      {{"moment-growth", "oscillatory", false, "||H_{KQ^n}|| for K = 1/(x-y), Q = sin(x-y)"},
       exp_moment_growth},
      {{"taylor-consistency", "oscillatory", false, "T_{K,tQ} against its truncated moment series"},
       exp_taylor_consistency},
      {{"phase-removal", "oscillatory", false, "||H_{K cos^n Q}|| against D^n"}, exp_phase_removal},
  };
  return list;
}

const Entry& lookup(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.info.name == name) {
      return e;
    }
  }
  throw ConfigError("experiment", "unknown experiment \"" + name + "\"");
}

std::string csv_table(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out += (i ? "," : "") + t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out += ',';
      }
      if (const auto* d = std::get_if<double>(&row[i])) {
        out += format_number(*d);
      } else {
        out += std::get<std::string>(row[i]);
      }
    }
    out += '\n';
  }
  return out;
}

Json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    return std::isfinite(*d) ? Json(*d) : Json(format_number(*d));
  }
  return std::get<std::string>(c);
}

Json result_json(const Result& r) {
  Json tables = Json::object();
  for (const auto& t : r.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json jr = Json::array();
      for (const auto& c : row) {
        jr.push_back(cell_json(c));
      }
      rows.push_back(std::move(jr));
    }
    tables[t.name.empty() ? "main" : t.name] = {{"columns", t.columns}, {"rows", rows}};
  }
  return {{"experiment", r.experiment},
          {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
          {"params", r.params},
          {"tables", tables},
          {"summary", r.summary}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("config", "cannot read \"" + path + "\"");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Format parse_format(const std::string& s, const std::string& field) {
  if (s == "csv") {
    return Format::csv;
  }
  if (s == "json") {
    return Format::json;
  }
  throw ConfigError(field, "must be \"csv\" or \"json\", got \"" + s + "\"");
}

}  // namespace

const std::vector<ExperimentInfo>& registry() {
  static const std::vector<ExperimentInfo> list = [] {
    std::vector<ExperimentInfo> v;
    for (const auto& e : entries()) {
      v.push_back(e.info);
    }
    return v;
  }();
  return list;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> list{"psi",         "interp",  "mult-norm",
                                             "growth",      "spherical", "counterexample",
                                             "curves",      "oscillatory", "report"};
  return list;
}

std::string default_experiment(const std::string& subcommand) {
  static const std::vector<std::pair<std::string, std::string>> defaults{
      {"psi", "psi-majorant"},       {"interp", "interp-limits"},
      {"mult-norm", "mult-norm"},    {"growth", "growth-curve"},
      {"spherical", "sphere-growth"}, {"counterexample", "counterexample"},
      {"curves", "divergence-witness"}, {"oscillatory", "moment-growth"}};
  for (const auto& [sub, exp] : defaults) {
    if (sub == subcommand) {
      return exp;
    }
  }
  throw ConfigError("subcommand", "\"" + subcommand + "\" has no single default experiment");
}

ExperimentConfig parse_config(const Json& j) {
  if (!j.is_object()) {
    throw ConfigError("config", "expected a JSON object");
  }
  ExperimentConfig cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& key = it.key();
    const auto& v = it.value();
    if (key == "experiment") {
      if (!v.is_string()) {
        throw ConfigError("experiment", "expected a string");
      }
      cfg.experiment = v.get<std::string>();
    } else if (key == "seed") {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ConfigError("seed", "expected a non-negative 64-bit integer");
      }
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "params") {
      if (!v.is_object()) {
        throw ConfigError("params", "expected an object");
      }
      cfg.params = v;
    } else if (key == "out") {
      if (!v.is_string()) {
        throw ConfigError("out", "expected a string");
      }
      cfg.out = v.get<std::string>();
    } else if (key == "format") {
      if (!v.is_string()) {
        throw ConfigError("format", "expected a string");
      }
      cfg.format = parse_format(v.get<std::string>(), "format");
    } else {
      throw ConfigError(key, "unknown config field");
    }
  }
  if (!j.contains("experiment")) {
    throw ConfigError("experiment", "missing");
  }
  lookup(cfg.experiment);
  return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

Result run(const ExperimentConfig& cfg) {
  const auto& e = lookup(cfg.experiment);
  if (e.info.randomized && !cfg.seed) {
    throw ConfigError("seed", "required by randomized experiment \"" + cfg.experiment + "\"");
  }
  Result r;
  r.experiment = cfg.experiment;
  r.seed = cfg.seed;
  Params p(cfg.params);
  e.fn(p, cfg.seed, r);
  return r;
}

std::vector<Result> run_report(std::optional<std::uint64_t> seed) {
  if (!seed) {
    throw ConfigError("seed", "required by report, which runs randomized experiments");
  }
  std::vector<Result> out;
  for (const auto& e : entries()) {
    ExperimentConfig cfg;
    cfg.experiment = e.info.name;
    cfg.seed = seed;
    out.push_back(run(cfg));
  }
  return out;
}

std::vector<Artifact> render(const Result& r, Format fmt) {
  std::vector<Artifact> out;
  if (fmt == Format::json) {
    out.push_back({r.experiment + ".json", result_json(r).dump(2) + "\n"});
    return out;
  }
  for (const auto& t : r.tables) {
    out.push_back({r.experiment + (t.name.empty() ? "" : "_" + t.name) + ".csv", csv_table(t)});
  }
  if (!r.summary.empty()) {
    out.push_back({r.experiment + "_summary.json", r.summary.dump(2) + "\n"});
  }
  return out;
}

std::vector<Artifact> render_report(const std::vector<Result>& results, Format fmt) {
  std::vector<Artifact> out;
  Json index = Json::array();
  for (const auto& r : results) {
    Json files = Json::array();
    for (auto& a : render(r, fmt)) {
      files.push_back(a.filename);
      out.push_back(std::move(a));
    }
    index.push_back({{"experiment", r.experiment}, {"files", files}, {"summary", r.summary}});
  }
  out.push_back({"report.json", Json{{"experiments", index}}.dump(2) + "\n"});
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::pair<fs::path, fs::path>> staged;
  try {
    for (const auto& a : artifacts) {
      const fs::path final_path = fs::path(dir) / a.filename;
      const fs::path tmp = fs::path(dir) / ("." + a.filename + ".tmp");
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << a.content;
      out.close();
      if (!out) {
        throw std::runtime_error("cannot write " + tmp.string());
      }
      staged.emplace_back(tmp, final_path);
    }
  } catch (...) {
    for (const auto& [tmp, dest] : staged) {
      std::error_code ec;
      fs::remove(tmp, ec);
    }
    throw;
  }
  for (const auto& [tmp, dest] : staged) {
    fs::rename(tmp, dest);
  }
}

int run_main(int argc, char** argv) {
  CLI::App app{"multlab experiments"};
  std::string command;
  std::string config_path;
  std::string experiment;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "csv";
  bool list = false;
  app.add_option("command", command, "subcommand")->check(CLI::IsMember(subcommands()));
  auto* config_opt = app.add_option("--config", config_path, "JSON config file");
  auto* exp_opt = app.add_option("--experiment", experiment, "experiment within the subcommand");
  auto* seed_opt = app.add_option("--seed", seed, "64-bit seed");
  auto* out_opt = app.add_option("--out", out_dir, "output directory");
  auto* format_opt =
      app.add_option("--format", format, "artifact format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--list", list, "list experiments and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& e : registry()) {
      std::cout << e.subcommand << "\t" << e.name << (e.randomized ? "\t(seeded)" : "") << "\t"
                << e.description << "\n";
    }
    return 0;
  }
  if (command.empty()) {
    std::cerr << "multlab_cli: command: missing (one of psi, interp, mult-norm, growth, spherical, "
                 "counterexample, curves, oscillatory, report)\n";
    return 2;
  }

  std::string current = command;
  try {
    ExperimentConfig cfg;
    if (config_opt->count() > 0) {
      cfg = parse_config_text(read_file(config_path));
    } else if (command == "report") {
      cfg.experiment = "report";
    } else {
      cfg.experiment = exp_opt->count() > 0 ? experiment : default_experiment(command);
    }
    if (exp_opt->count() > 0 && config_opt->count() > 0 && experiment != cfg.experiment) {
      throw ConfigError("experiment", "--experiment disagrees with the config file");
    }
    if (seed_opt->count() > 0) {
      cfg.seed = seed;
    }
    const std::string dir = out_opt->count() > 0 ? out_dir : cfg.out.value_or(out_dir);
    const Format fmt = format_opt->count() > 0 ? parse_format(format, "format")
                                               : cfg.format.value_or(Format::csv);

    std::vector<Artifact> artifacts;
    if (command == "report") {
      if (cfg.experiment != "report") {
        throw ConfigError("experiment", "the report subcommand takes experiment \"report\"");
      }
      if (!cfg.params.empty()) {
        throw ConfigError("params", "report takes no parameters");
      }
      artifacts = render_report(run_report(cfg.seed), fmt);
    } else {
      const auto& e = lookup(cfg.experiment);
      if (e.info.subcommand != command) {
        throw ConfigError("experiment", "\"" + cfg.experiment + "\" belongs to subcommand \"" +
                                            e.info.subcommand + "\", not \"" + command + "\"");
      }
      current = cfg.experiment;
      artifacts = render(run(cfg), fmt);
    }
    write_artifacts(dir, artifacts);
    for (const auto& a : artifacts) {
      std::cout << (std::filesystem::path(dir) / a.filename).string() << "\n";
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "multlab_cli: config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "multlab_cli: " << current << ": " << e.what() << "\n";
    return 3;
  }
}

}  // namespace multlab::cli
