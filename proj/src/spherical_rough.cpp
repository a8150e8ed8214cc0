#include "multlab/spherical_rough.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "multlab/detail/fft.hpp"

namespace multlab::sphere {

namespace {

constexpr double kPi = std::numbers::pi;

complex i_pow_minus(int j) {
  switch (j % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, -1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, 1.0};
  }
}

void check_resolution(std::size_t nodes, std::size_t J) {
  if (nodes < 4 * J) {
    throw AliasingError("grid of " + std::to_string(nodes) + " nodes cannot resolve degree " +
                        std::to_string(J) + " (need >= 4J)");
  }
}

// DST-I of the real and imaginary parts.
std::vector<complex> dst1_complex(const std::vector<complex>& in) {
  std::vector<double> re(in.size()), im(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    re[k] = in[k].real();
    im[k] = in[k].imag();
  }
  detail::dst1_inplace(re);
  detail::dst1_inplace(im);
  std::vector<complex> out(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    out[k] = {re[k], im[k]};
  }
  return out;
}

double l2(const std::vector<complex>& c) {
  double s = 0.0;
  for (const auto& z : c) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

}  // namespace

ZonalExpansion::ZonalExpansion(int n, std::vector<complex> coeffs, bool cancellation)
    : n_(n), coeffs_(std::move(coeffs)), cancellation_(cancellation) {
  if (n_ != 2 && n_ != 4) {
    throw DomainError("ZonalExpansion: ambient dimension must be 2 or 4");
  }
  if (coeffs_.empty()) {
    throw DomainError("ZonalExpansion: at least one coefficient required");
  }
  for (const auto& z : coeffs_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("ZonalExpansion: coefficients must be finite");
    }
  }
  if (cancellation_ && coeffs_[0] != complex(0.0)) {
    throw DomainError("ZonalExpansion: cancellation requires a vanishing j = 0 coefficient");
  }
}

LatitudeGrid make_latitude_grid(int n, std::size_t size) {
  if (size == 0) {
    throw DomainError("make_latitude_grid: size must be positive");
  }
  LatitudeGrid g{n, std::vector<double>(size), std::vector<double>(size)};
  const double N = static_cast<double>(size);
  if (n == 2) {
    for (std::size_t k = 0; k < size; ++k) {
      g.nodes[k] = 2.0 * kPi * static_cast<double>(k) / N;
      g.weights[k] = 1.0 / N;
    }
  } else if (n == 4) {
    for (std::size_t k = 0; k < size; ++k) {
      const double th = kPi * static_cast<double>(k + 1) / (N + 1.0);
      const double s = std::sin(th);
      g.nodes[k] = th;
      g.weights[k] = 2.0 * s * s / (N + 1.0);
    }
  } else {
    throw DomainError("make_latitude_grid: n must be 2 or 4");
  }
  return g;
}

double gamma_coefficient(int j, int n) {
  if (j < 1) {
    throw DomainError("gamma_coefficient: j must be >= 1");
  }
  if (n != 2 && n != 4) {
    throw DomainError("gamma_coefficient: n must be 2 or 4");
  }
  double denom = 1.0;
  for (int k = 0; k < n / 2; ++k) {
    denom *= 0.5 * j + k;
  }
  return std::pow(kPi, n / 2) / denom;
}

ZonalExpansion symbol_from_omega(const ZonalExpansion& omega) {
  if (!omega.cancellation() || omega.coeffs()[0] != complex(0.0)) {
    throw DomainError("symbol_from_omega: Omega must have vanishing mean");
  }
  auto c = omega.coeffs();
  for (std::size_t j = 1; j < c.size(); ++j) {
    const int jj = static_cast<int>(j);
    c[j] *= i_pow_minus(jj) * gamma_coefficient(jj, omega.n());
  }
  return {omega.n(), std::move(c), true};
}

double sphere_sobolev_norm(const ZonalExpansion& e, double s) {
  if (!(s >= 0.0)) {
    throw DomainError("sphere_sobolev_norm: s must be >= 0");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < e.coeffs().size(); ++j) {
    sum += std::pow(1.0 + static_cast<double>(j), 2.0 * s) * std::norm(e.coeffs()[j]);
  }
  return std::sqrt(sum);
}

double laplace_eigenvalue(int j, int n) { return static_cast<double>(j) * (j + n - 2); }

ZonalExpansion laplace_power(const ZonalExpansion& e, double r) {
  if (!(r >= 0.0)) {
    throw DomainError("laplace_power: r must be >= 0");
  }
  if (e.coeffs()[0] != complex(0.0)) {
    throw DomainError("laplace_power: j = 0 coefficient must vanish");
  }
  auto c = e.coeffs();
  for (std::size_t j = 1; j < c.size(); ++j) {
    c[j] *= std::pow(laplace_eigenvalue(static_cast<int>(j), e.n()), r);
  }
  return {e.n(), std::move(c), e.cancellation()};
}

double omom_ratio(const ZonalExpansion& omega) {
  const auto m = laplace_power(symbol_from_omega(omega), omega.n() / 4.0);
  const double num = l2(omega.coeffs());
  if (!(num > 0.0)) {
    throw DomainError("omom_ratio: zero expansion");
  }
  const double den = l2(m.coeffs());
  return (num * num) / (den * den);
}

std::vector<complex> evaluate_zonal(const ZonalExpansion& e, const LatitudeGrid& grid) {
  if (grid.n != e.n()) {
    throw DimensionMismatch("evaluate_zonal: expansion and grid live on different spheres");
  }
  const std::size_t N = grid.nodes.size();
  check_resolution(N, e.degree());
  std::vector<complex> buf(N, complex(0.0));
  std::copy(e.coeffs().begin(), e.coeffs().end(), buf.begin());
  if (e.n() == 2) {
    detail::fft_inplace(buf, {N}, detail::FftDirection::backward);
    return buf;
  }
  auto y = dst1_complex(buf);
  for (std::size_t k = 0; k < N; ++k) {
    y[k] /= 2.0 * std::sin(grid.nodes[k]);
  }
  return y;
}

ZonalExpansion project_zonal(const std::vector<complex>& samples, const LatitudeGrid& grid,
                             std::size_t J, bool cancellation) {
  const std::size_t N = grid.nodes.size();
  if (samples.size() != N) {
    throw DimensionMismatch("project_zonal: sample count differs from the grid");
  }
  check_resolution(N, J);
  std::vector<complex> c;
  if (grid.n == 2) {
    auto buf = samples;
    detail::fft_inplace(buf, {N}, detail::FftDirection::forward);
    c.assign(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(J + 1));
    for (auto& z : c) {
      z /= static_cast<double>(N);
    }
  } else {
    std::vector<complex> buf(N);
    for (std::size_t k = 0; k < N; ++k) {
      buf[k] = samples[k] * std::sin(grid.nodes[k]);
    }
    auto y = dst1_complex(buf);
    c.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(J + 1));
    for (auto& z : c) {
      z /= static_cast<double>(N) + 1.0;
    }
  }
  if (cancellation) {
    c[0] = 0.0;
  }
  return {grid.n, std::move(c), cancellation};
}

std::vector<complex> zonal_theta_derivative(const ZonalExpansion& e, const LatitudeGrid& grid) {
  if (grid.n != e.n()) {
    throw DimensionMismatch("zonal_theta_derivative: expansion and grid differ");
  }
  const auto& c = e.coeffs();
  std::vector<complex> out(grid.nodes.size(), complex(0.0));
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    const double th = grid.nodes[k];
    complex acc = 0.0;
    for (std::size_t j = 1; j < c.size(); ++j) {
      const double jj = static_cast<double>(j);
      if (e.n() == 2) {
        acc += c[j] * complex(0.0, jj) * complex(std::cos(jj * th), std::sin(jj * th));
      } else {
        const double s = std::sin(th);
        const double d = ((jj + 1.0) * std::cos((jj + 1.0) * th) * s -
                          std::sin((jj + 1.0) * th) * std::cos(th)) /
                         (s * s);
        acc += c[j] * d;
      }
    }
    out[k] = acc;
  }
  return out;
}

ZonalExpansion normalized(const ZonalExpansion& omega) {
  const double n = l2(omega.coeffs());
  if (!(n > 0.0)) {
    throw DomainError("normalized: zero expansion");
  }
  auto c = omega.coeffs();
  for (auto& z : c) {
    z /= n;
  }
  return {omega.n(), std::move(c), omega.cancellation()};
}

namespace {

struct GrowthContext {
  LatitudeGrid grid;
  std::vector<double> m;  // real samples
};

GrowthContext prepare(const ZonalExpansion& m, const SphereGrowthOptions& opt) {
  if (m.n() != 4) {
    throw DomainError("unimodular_sphere_growth: zonal S^3 expansions only (n = 4)");
  }
  check_resolution(opt.grid_size, opt.work_degree);
  if (m.degree() > opt.work_degree) {
    throw AliasingError("unimodular_sphere_growth: degree of m exceeds the working degree");
  }
  GrowthContext ctx{make_latitude_grid(4, opt.grid_size), {}};
  const auto vals = evaluate_zonal(m, ctx.grid);
  double scale = 0.0;
  for (const auto& z : vals) {
    scale = std::max(scale, std::abs(z));
  }
  for (const auto& z : vals) {
    if (std::abs(z.imag()) > 1e-12 * std::max(1.0, scale)) {
      throw DomainError("unimodular_sphere_growth: m must be real-valued on the grid");
    }
    ctx.m.push_back(z.real());
  }
  return ctx;
}

// Coefficients of e^{itm} up to the working degree, with the aliasing check.
ZonalExpansion exp_coefficients(const GrowthContext& ctx, double t,
                                const SphereGrowthOptions& opt, double* tail_fraction) {
  std::vector<complex> g(ctx.m.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    g[k] = {std::cos(t * ctx.m[k]), std::sin(t * ctx.m[k])};
  }
  auto c = project_zonal(g, ctx.grid, opt.work_degree);
  double total = 0.0, tail = 0.0;
  const std::size_t cut = 3 * opt.work_degree / 4;
  for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
    total += std::norm(c.coeffs()[j]);
    if (j > cut) {
      tail += std::norm(c.coeffs()[j]);
    }
  }
  const double frac = total > 0.0 ? tail / total : 0.0;
  if (frac > opt.tail_tolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "unimodular_sphere_growth: e^{itm} not resolved at t = %.6g (tail energy "
                  "fraction %.3g above tolerance %.3g)",
                  t, frac, opt.tail_tolerance);
    throw AliasingError(buf);
  }
  if (tail_fraction != nullptr) {
    *tail_fraction = frac;
  }
  return c;
}

}  // namespace

SphereGrowthTable unimodular_sphere_growth(const ZonalExpansion& m,
                                           const std::vector<double>& t_grid,
                                           const SphereGrowthOptions& opt) {
  const auto ctx = prepare(m, opt);
  SphereGrowthTable table{{}, 0.0};
  for (double t : t_grid) {
    double frac = 0.0;
    const auto c = exp_coefficients(ctx, t, opt, &frac);
    double sum = 0.0;
    for (std::size_t j = 1; j < c.coeffs().size(); ++j) {
      const double lam = laplace_eigenvalue(static_cast<int>(j), 4);
      sum += lam * lam * std::norm(c.coeffs()[j]);
    }
    table.rows.push_back({t, std::sqrt(sum), frac});
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (const auto& row : table.rows) {
    if (row.t > 0.0 && row.norm > 0.0) {
      const double x = std::log(row.t);
      const double y = std::log(row.norm);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++count;
    }
  }
  if (count >= 2) {
    const double denom = count * sxx - sx * sx;
    table.exponent = denom > 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
  }
  return table;
}

double leibniz_residual(const ZonalExpansion& m, double t, const SphereGrowthOptions& opt) {
  const auto ctx = prepare(m, opt);
  auto c = exp_coefficients(ctx, t, opt, nullptr).coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] *= -laplace_eigenvalue(static_cast<int>(j), 4);
  }
  const auto lhs = evaluate_zonal(ZonalExpansion(4, std::move(c), false), ctx.grid);

  auto mc = m.coeffs();
  for (std::size_t j = 0; j < mc.size(); ++j) {
    mc[j] *= -laplace_eigenvalue(static_cast<int>(j), 4);
  }
  const auto lap_m = evaluate_zonal(ZonalExpansion(4, std::move(mc), false), ctx.grid);
  const auto dm = zonal_theta_derivative(m, ctx.grid);

  double err = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    const complex e(std::cos(t * ctx.m[k]), std::sin(t * ctx.m[k]));
    const double grad2 = std::norm(dm[k]);
    const complex rhs = complex(0.0, t) * e * lap_m[k].real() - t * t * e * grad2;
    err = std::max(err, std::abs(lhs[k] - rhs));
    scale = std::max(scale, std::abs(rhs));
  }
  return scale > 0.0 ? err / scale : err;
}

}  // namespace multlab::sphere
