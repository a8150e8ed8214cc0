#include "multlab/grid_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "multlab/detail/fft.hpp"
#include "multlab/detail/rng.hpp"

namespace multlab::grid {

namespace {

using detail::FftDirection;

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) {
    n *= d;
  }
  return n;
}

void check_dims(const std::vector<std::size_t>& dims, std::size_t count, const char* what) {
  if (dims.empty()) {
    throw DomainError(std::string(what) + ": dims must not be empty");
  }
  for (auto d : dims) {
    if (!is_power_of_two(d)) {
      throw DomainError(std::string(what) + ": every axis length must be a power of two");
    }
  }
  if (product(dims) != count) {
    throw DimensionMismatch(std::string(what) + ": sample count does not match dims");
  }
}

void check_same_shape(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                      const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": grid dimensions differ");
  }
}

// Index of -x modulo the grid.
std::size_t negated_index(std::size_t idx, const std::vector<std::size_t>& dims) {
  std::size_t out = 0;
  std::size_t stride = 1;
  for (std::size_t a = dims.size(); a-- > 0;) {
    const std::size_t n = dims[a];
    const std::size_t i = (idx / stride) % n;
    out += ((n - i) % n) * stride;
    stride *= n;
  }
  return out;
}

complex unit_sign(complex z) {
  const double r = std::abs(z);
  return r > 0.0 ? z / r : complex(0.0);
}

std::vector<complex> apply_raw(const std::vector<complex>& m, const std::vector<std::size_t>& dims,
                               std::vector<complex> data, bool adjoint) {
  detail::fft_inplace(data, dims, FftDirection::forward);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] *= (adjoint ? std::conj(m[i]) : m[i]) * scale;
  }
  detail::fft_inplace(data, dims, FftDirection::backward);
  return data;
}

double norm2(const std::vector<complex>& v) {
  double s = 0.0;
  for (const auto& z : v) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

// (sum w |v|^p)^{1/p} without cell volume, scaled against overflow.
double raw_lp(const std::vector<complex>& v, double p, const Weight& w) {
  double mx = 0.0;
  for (const auto& z : v) {
    mx = std::max(mx, std::abs(z));
  }
  if (std::isinf(p) || mx == 0.0) {
    return mx;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += w.at(i) * std::pow(std::abs(v[i]) / mx, p);
  }
  return mx * std::pow(s, 1.0 / p);
}

GridFunction unit_grid(const std::vector<std::size_t>& dims, std::vector<complex> samples) {
  return GridFunction(dims, std::vector<double>(dims.size(), 1.0), std::move(samples));
}

struct AscentResult {
  double value;
  std::vector<complex> f;
};

// Projected gradient ascent of ||T f||_{p,w} / ||f||_{p,w} with step halving.
AscentResult ascend(const Symbol& m, double p, const Weight& w, std::vector<complex> f,
                    int steps) {
  const auto& dims = m.dims();
  const auto& ms = m.samples();
  auto ratio = [&](const std::vector<complex>& x) {
    const double den = raw_lp(x, p, w);
    return den > 0.0 ? raw_lp(apply_raw(ms, dims, x, false), p, w) / den : 0.0;
  };
  // d/d conj(x) of log sum w |x|^p, up to the factor p/2.
  auto log_gradient = [&](const std::vector<complex>& x) {
    double mx = 0.0;
    for (const auto& z : x) {
      mx = std::max(mx, std::abs(z));
    }
    std::vector<complex> g(x.size());
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double a = std::abs(x[i]) / mx;
      total += w.at(i) * std::pow(a, p);
      g[i] = w.at(i) * unit_sign(x[i]) * std::pow(a, p - 1.0);
    }
    for (auto& z : g) {
      z /= total * mx;
    }
    return g;
  };

  double best = ratio(f);
  double eta = 0.5;
  for (int step = 0; step < steps && eta > 1e-12; ++step) {
    const auto tf = apply_raw(ms, dims, f, false);
    auto d = apply_raw(ms, dims, log_gradient(tf), true);
    const auto gf = log_gradient(f);
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] -= gf[i];
    }
    const double dn = norm2(d);
    if (!(dn > 0.0)) {
      break;
    }
    const double scale = eta * norm2(f) / dn;
    std::vector<complex> trial(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      trial[i] = f[i] + scale * d[i];
    }
    const double r = ratio(trial);
    if (r > best) {
      best = r;
      const double nt = raw_lp(trial, p, w);
      for (auto& z : trial) {
        z /= nt;
      }
      f = std::move(trial);
      eta = std::min(2.0 * eta, 1.0);
    } else {
      eta *= 0.5;
    }
  }
  return {best, std::move(f)};
}

std::vector<complex> make_probe(const std::vector<std::size_t>& dims, std::size_t n, int index,
                                std::uint64_t seed) {
  auto rng = detail::task_rng(seed, static_cast<std::uint64_t>(index));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<complex> f(n, complex(0.0));
  switch (index % 3) {
    case 0:
      for (auto& z : f) {
        z = {normal(rng), normal(rng)};
      }
      break;
    case 1: {
      const int spikes = 1 + (index / 3) % 4;
      for (int s = 0; s < spikes; ++s) {
        const auto pos = static_cast<std::size_t>(uniform(rng) * static_cast<double>(n)) % n;
        const double phase = 2.0 * std::numbers::pi * uniform(rng);
        f[pos] += complex(std::cos(phase), std::sin(phase));
      }
      break;
    }
    default: {
      std::vector<double> centre(dims.size()), width(dims.size()), freq(dims.size());
      for (std::size_t a = 0; a < dims.size(); ++a) {
        const double na = static_cast<double>(dims[a]);
        centre[a] = uniform(rng) * na;
        width[a] = 1.0 + uniform(rng) * std::max(1.0, na / 8.0);
        freq[a] = std::floor(uniform(rng) * na) / na;
      }
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t rest = i;
        double env = 0.0;
        double phase = 0.0;
        for (std::size_t a = dims.size(); a-- > 0;) {
          const double na = static_cast<double>(dims[a]);
          const double x = static_cast<double>(rest % dims[a]);
          rest /= dims[a];
          double dx = std::fmod(std::abs(x - centre[a]), na);
          dx = std::min(dx, na - dx);
          env += dx * dx / (width[a] * width[a]);
          phase += 2.0 * std::numbers::pi * freq[a] * x;
        }
        f[i] = std::exp(-0.5 * env) * complex(std::cos(phase), std::sin(phase));
      }
      break;
    }
  }
  return f;
}

NormEstimate weighted_l2_norm(const Symbol& m, const Weight& w, const NormBudget& budget) {
  const auto& dims = m.dims();
  const auto& ms = m.samples();
  const std::size_t n = m.size();
  std::vector<double> sw(n), isw(n);
  for (std::size_t i = 0; i < n; ++i) {
    sw[i] = std::sqrt(w.at(i));
    isw[i] = 1.0 / sw[i];
  }
  auto apply_a = [&](const std::vector<complex>& v) {
    std::vector<complex> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = isw[i] * v[i];
    }
    g = apply_raw(ms, dims, std::move(g), false);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] *= sw[i];
    }
    return g;
  };
  auto apply_ah = [&](const std::vector<complex>& u) {
    std::vector<complex> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = sw[i] * u[i];
    }
    g = apply_raw(ms, dims, std::move(g), true);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] *= isw[i];
    }
    return g;
  };

  double best_value = -1.0;
  bool best_converged = false;
  std::vector<complex> best_v;
  for (int start = 0; start <= budget.restarts; ++start) {
    std::vector<complex> v(n, complex(1.0));
    if (start > 0) {
      auto rng = detail::task_rng(budget.seed, static_cast<std::uint64_t>(start));
      std::normal_distribution<double> normal(0.0, 1.0);
      for (auto& z : v) {
        z = {normal(rng), normal(rng)};
      }
    }
    double nv = norm2(v);
    for (auto& z : v) {
      z /= nv;
    }
    // Restarted Lanczos on A^* A with full reorthogonalization; each cycle
    // restarts from the leading Ritz vector. The budget counts products.
    auto apply_b = [&](const std::vector<complex>& x) { return apply_ah(apply_a(x)); };
    const std::size_t krylov = std::min<std::size_t>(n, 64);
    bool converged = false;
    int products = 0;
    while (products < budget.power_iterations) {
      std::vector<std::vector<complex>> V{v};
      std::vector<double> alpha, beta;
      for (std::size_t j = 0; j < krylov; ++j) {
        auto wv = apply_b(V[j]);
        ++products;
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& q : V) {
            complex h = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
              h += std::conj(q[i]) * wv[i];
            }
            for (std::size_t i = 0; i < n; ++i) {
              wv[i] -= h * q[i];
            }
            if (pass == 0 && &q == &V[j]) {
              alpha.push_back(h.real());
            }
          }
        }
        const double b = norm2(wv);
        if (j + 1 == krylov || !(b > 1e-14 * std::abs(alpha.back()))) {
          break;
        }
        beta.push_back(b);
        for (auto& z : wv) {
          z /= b;
        }
        V.push_back(std::move(wv));
      }
      const std::size_t k = alpha.size();
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      for (std::size_t j = 0; j < k; ++j) {
        T(j, j) = alpha[j];
        if (j + 1 < k) {
          T(j, j + 1) = T(j + 1, j) = beta[j];
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
      const Eigen::VectorXd y = es.eigenvectors().col(static_cast<Eigen::Index>(k) - 1);
      std::vector<complex> x(n, 0.0);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          x[i] += y[static_cast<Eigen::Index>(j)] * V[j][i];
        }
      }
      nv = norm2(x);
      for (auto& z : x) {
        z /= nv;
      }
      const auto bx = apply_b(x);
      ++products;
      complex rq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        rq += std::conj(x[i]) * bx[i];
      }
      const double sigma2 = rq.real();
      double residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        residual += std::norm(bx[i] - sigma2 * x[i]);
      }
      v = std::move(x);
      if (std::sqrt(residual) <= budget.tolerance * sigma2) {
        converged = true;
        break;
      }
      if (!(sigma2 > 0.0)) {
        break;
      }
    }
    const double value = norm2(apply_a(v)) / norm2(v);
    if (value > best_value) {
      best_value = value;
      best_converged = converged;
      best_v = v;
    }
  }
  std::vector<complex> witness(n);
  for (std::size_t i = 0; i < n; ++i) {
    witness[i] = isw[i] * best_v[i];
  }
  const auto kind = best_converged ? EstimateKind::exact : EstimateKind::lower_bound;
  return {best_value, unit_grid(dims, std::move(witness)), kind, best_converged};
}

}  // namespace

// --- value types ---------------------------------------------------------------

GridFunction::GridFunction(std::vector<std::size_t> dims, std::vector<double> spacing,
                           std::vector<complex> samples)
    : dims_(std::move(dims)), spacing_(std::move(spacing)), samples_(std::move(samples)) {
  check_dims(dims_, samples_.size(), "GridFunction");
  if (spacing_.size() != dims_.size()) {
    throw DimensionMismatch("GridFunction: one spacing per axis required");
  }
  for (double h : spacing_) {
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw DomainError("GridFunction: spacing must be positive and finite");
    }
  }
  for (const auto& z : samples_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("GridFunction: samples must be finite");
    }
  }
}

GridFunction GridFunction::zeros(std::vector<std::size_t> dims, std::vector<double> spacing) {
  const std::size_t n = product(dims);
  return {std::move(dims), std::move(spacing), std::vector<complex>(n)};
}

GridFunction GridFunction::from_samples(std::vector<complex> samples) {
  const std::size_t n = samples.size();
  return {{n}, {1.0}, std::move(samples)};
}

double GridFunction::cell_volume() const noexcept {
  double v = 1.0;
  for (double h : spacing_) {
    v *= h;
  }
  return v;
}

GridFunction GridFunction::with_samples(std::vector<complex> samples) const {
  return {dims_, spacing_, std::move(samples)};
}

Symbol::Symbol(std::vector<std::size_t> dims, std::vector<complex> samples)
    : dims_(std::move(dims)), samples_(std::move(samples)) {
  check_dims(dims_, samples_.size(), "Symbol");
  for (const auto& z : samples_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("Symbol: samples must be finite");
    }
  }
}

Symbol Symbol::from_samples(std::vector<complex> samples) {
  const std::size_t n = samples.size();
  return {{n}, std::move(samples)};
}

bool Symbol::unimodular() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](complex z) { return std::abs(std::abs(z) - 1.0) <= 1e-12; });
}

bool Symbol::real_valued(double tol) const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [tol](complex z) {
    return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z.real()));
  });
}

double Symbol::sup_modulus() const noexcept {
  double mx = 0.0;
  for (const auto& z : samples_) {
    mx = std::max(mx, std::abs(z));
  }
  return mx;
}

Weight::Weight(std::vector<std::size_t> dims, std::vector<double> samples)
    : dims_(std::move(dims)), samples_(std::move(samples)) {
  check_dims(dims_, samples_.size(), "Weight");
  for (double x : samples_) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw DomainError("Weight: samples must be positive and finite");
    }
  }
}

std::string to_string(EstimateKind kind) {
  return kind == EstimateKind::exact ? "exact" : "lower_bound";
}

// --- operations ------------------------------------------------------------------

double lp_norm(const GridFunction& f, double p, const Weight& w) {
  if (!(p >= 1.0)) {
    throw DomainError("lp_norm: p must be >= 1");
  }
  if (!w.is_unit() && w.samples().size() != f.size()) {
    throw DimensionMismatch("lp_norm: weight and function sizes differ");
  }
  if (std::isinf(p)) {
    return raw_lp(f.samples(), p, Weight::unit());
  }
  return raw_lp(f.samples(), p, w) * std::pow(f.cell_volume(), 1.0 / p);
}

GridFunction apply_multiplier(const Symbol& m, const GridFunction& f) {
  check_same_shape(m.dims(), f.dims(), "apply_multiplier");
  return f.with_samples(apply_raw(m.samples(), m.dims(), f.samples(), false));
}

std::vector<complex> unitary_dft(const GridFunction& f) {
  auto data = f.samples();
  detail::fft_inplace(data, f.dims(), FftDirection::forward);
  const double scale = 1.0 / std::sqrt(static_cast<double>(data.size()));
  for (auto& z : data) {
    z *= scale;
  }
  return data;
}

std::vector<complex> convolution_kernel(const Symbol& m) {
  auto k = m.samples();
  detail::fft_inplace(k, m.dims(), FftDirection::backward);
  const double scale = 1.0 / static_cast<double>(k.size());
  for (auto& z : k) {
    z *= scale;
  }
  return k;
}

double rayleigh_ratio(const Symbol& m, const GridFunction& f, double p, const Weight& w) {
  check_same_shape(m.dims(), f.dims(), "rayleigh_ratio");
  const double den = lp_norm(f, p, w);
  if (!(den > 0.0)) {
    throw DomainError("rayleigh_ratio: zero function");
  }
  return lp_norm(apply_multiplier(m, f), p, w) / den;
}

NormEstimate multiplier_norm(const Symbol& m, double p, const Weight& w,
                             const NormBudget& budget) {
  if (!(p >= 1.0)) {
    throw DomainError("multiplier_norm: p must be >= 1");
  }
  if (!w.is_unit()) {
    check_same_shape(m.dims(), w.dims(), "multiplier_norm");
  }
  const auto& dims = m.dims();
  const std::size_t n = m.size();
  const auto& ms = m.samples();

  if (p == 2.0 && w.is_unit()) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(ms[i]) > std::abs(ms[arg])) {
        arg = i;
      }
    }
    std::vector<complex> wave(n, complex(0.0));
    wave[arg] = 1.0;
    detail::fft_inplace(wave, dims, FftDirection::backward);
    return {std::abs(ms[arg]), unit_grid(dims, std::move(wave)), EstimateKind::exact, true};
  }

  if (std::isinf(p) || (p == 1.0 && w.is_unit())) {
    const auto k = convolution_kernel(m);
    double total = 0.0;
    for (const auto& z : k) {
      total += std::abs(z);
    }
    std::vector<complex> witness(n, complex(0.0));
    if (std::isinf(p)) {
      // (k * f)(0) = sum_y k(y) f(-y) = sum |k| for f(x) = conj sign k(-x).
      for (std::size_t i = 0; i < n; ++i) {
        const complex s = unit_sign(k[negated_index(i, dims)]);
        witness[i] = s == complex(0.0) ? complex(1.0) : std::conj(s);
      }
    } else {
      witness[0] = 1.0;
    }
    return {total, unit_grid(dims, std::move(witness)), EstimateKind::exact, true};
  }

  if (p == 1.0) {
    // ||T||_{L^1(w)} = max_y sum_x w(x) |k(x - y)| / w(y); S = w correlated with |k|.
    const auto k = convolution_kernel(m);
    std::vector<complex> wf(n), af(n);
    for (std::size_t i = 0; i < n; ++i) {
      wf[i] = w.at(i);
      af[i] = std::abs(k[i]);
    }
    detail::fft_inplace(wf, dims, FftDirection::forward);
    detail::fft_inplace(af, dims, FftDirection::forward);
    for (std::size_t i = 0; i < n; ++i) {
      wf[i] *= std::conj(af[i]);
    }
    detail::fft_inplace(wf, dims, FftDirection::backward);
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t y = 0; y < n; ++y) {
      const double r = wf[y].real() / static_cast<double>(n) / w.at(y);
      if (r > best) {
        best = r;
        arg = y;
      }
    }
    std::vector<complex> witness(n, complex(0.0));
    witness[arg] = 1.0;
    GridFunction wit = unit_grid(dims, std::move(witness));
    const double value = rayleigh_ratio(m, wit, 1.0, w);
    return {value, std::move(wit), EstimateKind::exact, true};
  }

  if (p == 2.0) {
    return weighted_l2_norm(m, w, budget);
  }

  double best = -1.0;
  std::vector<complex> best_f;
  for (int probe = 0; probe < budget.probes; ++probe) {
    auto f = make_probe(dims, n, probe, budget.seed);
    if (norm2(f) == 0.0) {
      continue;
    }
    auto result = ascend(m, p, w, std::move(f), budget.ascent_steps);
    if (result.value > best) {
      best = result.value;
      best_f = std::move(result.f);
    }
  }
  if (best_f.empty()) {
    best_f.assign(n, complex(1.0));
  }
  GridFunction wit = unit_grid(dims, std::move(best_f));
  const double value = rayleigh_ratio(m, wit, p, w);
  return {value, std::move(wit), EstimateKind::lower_bound, true};
}

bool verify_witness(const Symbol& m, double p, const Weight& w, const NormEstimate& est,
                    double rel_tol) {
  const double r = rayleigh_ratio(m, est.witness, p, w);
  if (est.kind == EstimateKind::exact) {
    return std::abs(r - est.value) <= rel_tol * std::max(est.value, 1e-300);
  }
  return r >= est.value * (1.0 - rel_tol);
}

double ap_characteristic(const Weight& w, double p) {
  if (!(p >= 1.0)) {
    throw DomainError("ap_characteristic: p must be >= 1");
  }
  if (w.is_unit()) {
    return 1.0;
  }
  const auto& dims = w.dims();
  const auto& ws = w.samples();
  const std::size_t n = ws.size();
  std::size_t levels = 0;
  for (auto d : dims) {
    levels = std::max(levels, static_cast<std::size_t>(std::log2(static_cast<double>(d)) + 0.5));
  }
  const double dual = std::isinf(p) ? 0.0 : -1.0 / (p - 1.0);
  double best = 1.0;
  for (std::size_t level = 0; level <= levels; ++level) {
    std::vector<std::size_t> side(dims.size()), boxes(dims.size());
    std::size_t nbox = 1;
    std::size_t cell = 1;
    for (std::size_t a = 0; a < dims.size(); ++a) {
      side[a] = std::max<std::size_t>(1, dims[a] >> level);
      boxes[a] = dims[a] / side[a];
      nbox *= boxes[a];
      cell *= side[a];
    }
    std::vector<double> sum_w(nbox, 0.0), sum_dual(nbox, 0.0);
    std::vector<double> min_w(nbox, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t rest = i;
      std::size_t box = 0;
      std::size_t stride = 1;
      for (std::size_t a = dims.size(); a-- > 0;) {
        const std::size_t coord = rest % dims[a];
        rest /= dims[a];
        box += (coord / side[a]) * stride;
        stride *= boxes[a];
      }
      sum_w[box] += ws[i];
      min_w[box] = std::min(min_w[box], ws[i]);
      if (p > 1.0) {
        sum_dual[box] += std::pow(ws[i], dual);
      }
    }
    const double c = static_cast<double>(cell);
    for (std::size_t b = 0; b < nbox; ++b) {
      const double value = p == 1.0 ? (sum_w[b] / c) / min_w[b]
                                    : (sum_w[b] / c) * std::pow(sum_dual[b] / c, p - 1.0);
      best = std::max(best, value);
    }
  }
  return best;
}

// --- serialization ---------------------------------------------------------------

std::string grid_to_json(const GridFunction& f) {
  nlohmann::json j;
  j["dims"] = f.dims();
  j["spacing"] = f.spacing();
  std::vector<double> re, im;
  re.reserve(f.size());
  im.reserve(f.size());
  for (const auto& z : f.samples()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

GridFunction grid_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  auto dims = j.at("dims").get<std::vector<std::size_t>>();
  auto spacing = j.at("spacing").get<std::vector<double>>();
  const auto re = j.at("re").get<std::vector<double>>();
  std::vector<double> im = j.contains("im") ? j.at("im").get<std::vector<double>>()
                                            : std::vector<double>(re.size(), 0.0);
  if (im.size() != re.size()) {
    throw DimensionMismatch("grid_from_json: re and im lengths differ");
  }
  std::vector<complex> samples(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    samples[i] = {re[i], im[i]};
  }
  return {std::move(dims), std::move(spacing), std::move(samples)};
}

std::string grid_to_csv(const GridFunction& f) {
  std::ostringstream out;
  out << "# dims=";
  for (std::size_t a = 0; a < f.dims().size(); ++a) {
    out << (a ? "x" : "") << f.dims()[a];
  }
  out << " spacing=";
  char buf[64];
  for (std::size_t a = 0; a < f.spacing().size(); ++a) {
    std::snprintf(buf, sizeof buf, "%.17g", f.spacing()[a]);
    out << (a ? "," : "") << buf;
  }
  out << "\nindex,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", f.samples()[i].real(), f.samples()[i].imag());
    out << i << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace multlab::grid
