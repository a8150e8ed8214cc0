#include "multlab/growth_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace multlab::growth {

namespace {

void check_increasing(const std::vector<double>& t, const char* what) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i])) {
      throw DomainError(std::string(what) + ": non-finite abscissa");
    }
    if (i > 0 && !(t[i] > t[i - 1])) {
      throw DomainError(std::string(what) + ": abscissae must be strictly increasing");
    }
  }
}

struct Line {
  double a;  // intercept
  double c;  // slope
};

// Lowest line above every point (x strictly increasing) measured by its
// height at the mean abscissa, slope >= 0.
Line envelope_line(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < x.size(); ++i) {
    while (hull.size() >= 2) {
      const auto j = hull[hull.size() - 2];
      const auto k = hull.back();
      // drop k when it lies on or below the chord j -> i
      const double cross = (x[k] - x[j]) * (y[i] - y[j]) - (y[k] - y[j]) * (x[i] - x[j]);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  const double xbar = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const auto i = hull[e];
    const auto j = hull[e + 1];
    if (x[j] >= xbar || e + 2 == hull.size()) {
      const double c = (y[j] - y[i]) / (x[j] - x[i]);
      if (c < 0.0) {
        break;
      }
      return {y[i] - c * x[i], c};
    }
  }
  return {*std::max_element(y.begin(), y.end()), 0.0};
}

GrowthBound fit_envelope(const std::vector<double>& t, const std::vector<double>& N) {
  std::vector<double> y(N.size());
  for (std::size_t k = 0; k < N.size(); ++k) {
    y[k] = std::log(N[k]);
  }
  std::vector<double> x(t.size());
  double best_gap = std::numeric_limits<double>::infinity();
  double best_s = 1.0;
  Line best_line{0.0, 0.0};
  for (int step = 1; step <= 1000; ++step) {
    const double s = step / 1000.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      x[k] = std::pow(t[k], s);
    }
    const Line line = envelope_line(x, y);
    double gap = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      gap += line.a + line.c * x[k] - y[k];
    }
    if (std::isinf(best_gap) || gap < best_gap - 1e-12 * (1.0 + std::abs(best_gap))) {
      best_gap = gap;
      best_s = s;
      best_line = line;
    }
  }
  const double s = best_s;
  const double c = best_line.c;
  double A = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    A = std::max(A, N[k] * std::exp(-c * std::pow(t[k], s)));
  }
  // make the stored inequality hold exactly in floating point
  for (std::size_t k = 0; k < t.size(); ++k) {
    while (N[k] > A * std::exp(c * std::pow(t[k], s))) {
      A = std::nextafter(A, std::numeric_limits<double>::infinity());
    }
  }
  return {A, c, s};
}

struct LsqFit {
  double residual;
  double c;
  double s;
};

LsqFit lsq_for(double A0, const std::vector<double>& t, const std::vector<double>& N) {
  const std::size_t n = t.size();
  std::vector<double> X(n), Y(n);
  for (std::size_t k = 0; k < n; ++k) {
    X[k] = std::log(t[k]);
    Y[k] = std::log(std::log(N[k] / A0));
  }
  const double mx = std::accumulate(X.begin(), X.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(Y.begin(), Y.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sxx += (X[k] - mx) * (X[k] - mx);
    sxy += (X[k] - mx) * (Y[k] - my);
  }
  double s = sxx > 0.0 ? sxy / sxx : 1.0;
  s = std::min(s, 1.0);
  const double logc = my - s * mx;
  double res = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = Y[k] - logc - s * X[k];
    res += r * r;
  }
  return {std::isfinite(res) ? res : std::numeric_limits<double>::infinity(), std::exp(logc), s};
}

GrowthBound fit_lsq(const std::vector<double>& t, const std::vector<double>& N) {
  std::vector<double> tt, nn;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] >= 1.0) {
      tt.push_back(t[k]);
      nn.push_back(N[k]);
    }
  }
  const double nmin = *std::min_element(nn.begin(), nn.end());
  // A0 = nmin exp(-v), searched over log v
  auto objective = [&](double logv) {
    return lsq_for(nmin * std::exp(-std::exp(logv)), tt, nn).residual;
  };
  constexpr double lo = -14.0, hi = 3.0;
  constexpr int grid = 400;
  int best_i = 0;
  double best_r = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double r = objective(lo + (hi - lo) * i / grid);
    if (r < best_r) {
      best_r = r;
      best_i = i;
    }
  }
  const double h = (hi - lo) / grid;
  double a = lo + h * std::max(best_i - 1, 0);
  double b = lo + h * std::min(best_i + 1, grid);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = objective(x1), f2 = objective(x2);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = objective(x2);
    }
  }
  const double A0 = nmin * std::exp(-std::exp(0.5 * (a + b)));
  const auto fit = lsq_for(A0, tt, nn);
  return {A0, fit.c, fit.s};
}

}  // namespace

// --- BoundFunction ---------------------------------------------------------------

BoundFunction::BoundFunction(std::vector<double> t, std::vector<double> value)
    : t_(std::move(t)), value_(std::move(value)) {
  if (t_.size() < 2 || t_.size() != value_.size()) {
    throw DomainError("BoundFunction: need at least two (t, value) pairs");
  }
  check_increasing(t_, "BoundFunction");
  if (t_.front() < 1.0) {
    throw DomainError("BoundFunction: nodes must lie in [1, inf)");
  }
  for (double v : value_) {
    if (!std::isfinite(v)) {
      throw DomainError("BoundFunction: values must be finite");
    }
  }
  if (!nondecreasing()) {
    throw DomainError("BoundFunction: values must be nondecreasing");
  }
}

BoundFunction BoundFunction::identity(std::vector<double> t) {
  auto v = t;
  return {std::move(t), std::move(v)};
}

double BoundFunction::operator()(double t) const {
  if (t <= t_.front()) {
    return value_.front();
  }
  auto it = std::upper_bound(t_.begin(), t_.end(), t);
  std::size_t j = it == t_.end() ? t_.size() - 1 : static_cast<std::size_t>(it - t_.begin());
  const std::size_t i = j - 1;
  const double slope = (value_[j] - value_[i]) / (t_[j] - t_[i]);
  return value_[i] + slope * (t - t_[i]);
}

bool BoundFunction::nondecreasing() const noexcept {
  for (std::size_t i = 1; i < value_.size(); ++i) {
    if (value_[i] < value_[i - 1]) {
      return false;
    }
  }
  return true;
}

// --- operations --------------------------------------------------------------------

Symbol unimodular_symbol(const Symbol& m, double t) {
  if (!m.real_valued()) {
    throw DomainError("unimodular_symbol: symbol must be real-valued");
  }
  std::vector<complex> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double phase = t * m.samples()[i].real();
    out[i] = {std::cos(phase), std::sin(phase)};
  }
  return {m.dims(), std::move(out)};
}

GrowthCurve growth_curve(const Symbol& m, double p, const Weight& w,
                         const std::vector<double>& t_grid, const NormBudget& budget) {
  check_increasing(t_grid, "growth_curve");
  GrowthCurve curve;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    NormBudget b = budget;
    b.seed = budget.seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    curve.samples.push_back({t_grid[i], grid::multiplier_norm(unimodular_symbol(m, t_grid[i]), p,
                                                              w, b)});
  }
  return curve;
}

std::string to_string(FitMode mode) { return mode == FitMode::envelope ? "envelope" : "lsq"; }

GrowthBound fit_exponential_power(const std::vector<double>& t, const std::vector<double>& N,
                                  FitMode mode) {
  if (t.size() != N.size()) {
    throw DimensionMismatch("fit_exponential_power: t and N lengths differ");
  }
  check_increasing(t, "fit_exponential_power");
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!(t[k] >= 0.0) || !(N[k] > 0.0) || !std::isfinite(N[k])) {
      throw DomainError("fit_exponential_power: need t >= 0 and finite N > 0");
    }
  }
  if (std::all_of(N.begin(), N.end(), [](double v) { return v <= 1.0; })) {
    throw DegenerateData("fit_exponential_power: no sample exceeds 1, every s fits with c = 0");
  }
  std::size_t usable = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    usable += (t[k] >= 1.0 && N[k] > 1.0) ? 1 : 0;
  }
  if (usable < 4) {
    throw InsufficientData("fit_exponential_power: need >= 4 samples with t >= 1 and N > 1");
  }
  return mode == FitMode::envelope ? fit_envelope(t, N) : fit_lsq(t, N);
}

GrowthBound fit_exponential_power(const GrowthCurve& curve, FitMode mode) {
  std::vector<double> t, N;
  for (const auto& s : curve.samples) {
    t.push_back(s.t);
    N.push_back(s.estimate.value);
  }
  return fit_exponential_power(t, N, mode);
}

std::vector<CosineTerm> cosine_power_expand(int k) {
  if (k < 0) {
    throw DomainError("cosine_power_expand: k must be >= 0");
  }
  std::vector<CosineTerm> terms;
  double binom = 1.0;
  const double scale = std::ldexp(1.0, -k);
  for (int j = 0; j <= k; ++j) {
    terms.push_back({k - 2 * j, binom * scale});
    binom = binom * (k - j) / (j + 1);
  }
  return terms;
}

double evaluate_cosine_expansion(const std::vector<CosineTerm>& terms, double x) {
  double s = 0.0;
  for (const auto& term : terms) {
    s += term.coefficient * std::cos(term.frequency * x);
  }
  return s;
}

Symbol cube_indicator_symbol(double R, const std::vector<std::size_t>& dims) {
  if (dims.empty()) {
    throw DomainError("cube_indicator_symbol: dims must not be empty");
  }
  for (auto d : dims) {
    if (!(R >= 0.0) || R > static_cast<double>(d)) {
      throw DomainError("cube_indicator_symbol: R exceeds the frequency grid extent");
    }
  }
  std::size_t n = 1;
  for (auto d : dims) {
    n *= d;
  }
  std::vector<complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    bool inside = true;
    for (std::size_t a = dims.size(); a-- > 0;) {
      const auto f = grid::fft_frequency(rest % dims[a], dims[a]);
      rest /= dims[a];
      inside = inside && std::abs(static_cast<double>(f)) <= 0.5 * R;
    }
    out[i] = inside ? 1.0 : 0.0;
  }
  return {dims, std::move(out)};
}

std::vector<CubeRow> cube_norm_study(const std::vector<double>& R_list,
                                     const std::vector<std::size_t>& dims, double p,
                                     const Weight& w, const NormBudget& budget) {
  std::vector<CubeRow> rows;
  for (double R : R_list) {
    const auto est = grid::multiplier_norm(cube_indicator_symbol(R, dims), p, w, budget);
    rows.push_back({R, est.value, est.kind});
  }
  return rows;
}

BoundFunction rf_transfer(const BoundFunction& psi, double p0, double p,
                          const TransferConstants& k) {
  if (!(p0 >= 1.0) || !(p > 1.0) || std::isinf(p0) || std::isinf(p)) {
    throw DomainError("rf_transfer: need finite p0 >= 1 and p > 1");
  }
  if (p == p0) {
    return psi;
  }
  std::vector<double> out;
  for (double t : psi.nodes()) {
    out.push_back(p < p0 ? psi(k.C1 * std::pow(t, (p0 - 1.0) / (p - 1.0))) : psi(k.C2 * t));
  }
  return {psi.nodes(), std::move(out)};
}

double ap_table_exponent(double p0, double p) {
  if (!(p0 > 1.0) || !(p > 1.0) || std::isinf(p0) || std::isinf(p)) {
    throw DomainError("ap_table: need finite p0 > 1 and p > 1");
  }
  if (p == p0 || p == 2.0 || p0 == 2.0) {
    throw DomainError("ap_table: p, p0 and 2 must be distinct to select a branch");
  }
  if (p < 2.0 && 2.0 < p0) {
    return (p0 - 1.0) / (p - 1.0);
  }
  if (p0 < 2.0 && 2.0 < p) {
    return 1.0;
  }
  if (p < 2.0 && p0 < 2.0) {
    return 1.0 / (p - 1.0);
  }
  return p0 - 1.0;
}

BoundFunction ap_table(const BoundFunction& psi, double p0, double p, double C) {
  const double e = ap_table_exponent(p0, p);
  std::vector<double> out;
  for (double t : psi.nodes()) {
    out.push_back(psi(C * std::pow(t, e)));
  }
  return {psi.nodes(), std::move(out)};
}

Symbol power_log_symbols(const Symbol& m, double a, int n) {
  if (n < 0) {
    throw DomainError("power_log_symbols: n must be >= 0");
  }
  if (!m.real_valued()) {
    throw DomainError("power_log_symbols: symbol must be real-valued");
  }
  std::vector<complex> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double x = m.samples()[i].real();
    if (!(x > 0.0)) {
      throw DomainError("power_log_symbols: samples must be strictly positive");
    }
    out[i] = std::pow(x, a) * std::pow(std::log(x), n);
  }
  return {m.dims(), std::move(out)};
}

TabulatedKernel exponential_kernel(double lambda, double dx, double x_max) {
  if (!(lambda > 0.0) || !(dx > 0.0) || !(x_max > dx)) {
    throw DomainError("exponential_kernel: need lambda > 0 and 0 < dx < x_max");
  }
  TabulatedKernel k{{}, {}, dx};
  for (double x = 0.5 * dx; x < x_max; x += dx) {
    k.x.push_back(x);
    k.phi.emplace_back(std::exp(-lambda * x));
  }
  return k;
}

Symbol mollified_symbol(const TabulatedKernel& phi, const Symbol& m, double s) {
  if (phi.x.size() != phi.phi.size() || !(phi.dx > 0.0)) {
    throw DomainError("mollified_symbol: malformed kernel table");
  }
  if (!(s > 0.0 && s <= 1.0)) {
    throw DomainError("mollified_symbol: s must lie in (0, 1]");
  }
  if (!m.real_valued()) {
    throw DomainError("mollified_symbol: symbol must be real-valued");
  }
  double weight = 0.0;
  for (std::size_t k = 0; k < phi.x.size(); ++k) {
    weight += std::abs(phi.phi[k]) * std::exp(std::pow(std::abs(phi.x[k]), s));
  }
  if (!std::isfinite(weight)) {
    throw DomainError("mollified_symbol: sum |phi| e^{|x|^s} diverges");
  }
  std::vector<complex> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double mi = m.samples()[i].real();
    complex acc = 0.0;
    for (std::size_t k = 0; k < phi.x.size(); ++k) {
      acc += phi.phi[k] * complex(std::cos(mi * phi.x[k]), -std::sin(mi * phi.x[k]));
    }
    out[i] = acc * phi.dx;
  }
  return {m.dims(), std::move(out)};
}

}  // namespace multlab::growth
