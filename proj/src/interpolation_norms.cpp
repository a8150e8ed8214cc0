#include "multlab/interpolation_norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace multlab::interp {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw DomainError("theta must lie in (0, 1), got " + std::to_string(theta));
  }
}

// All closed forms in terms of L = log(lambda); L = -inf stands for lambda = 0.
double norm_from_log(double L, double theta, SchechterKind kind, HReading reading) {
  if (std::isinf(L) && L < 0.0) {
    return 0.0;
  }
  const double sn = std::sin(kPi * theta);
  const double d = 2.0 * sn / kPi;
  const double aL = std::abs(L);
  const double lead = std::exp(theta * L);
  switch (kind) {
    case SchechterKind::lower_h: {
      // inf_a |1+a| + sqrt((1+a)^2 + M a^2) with M = pi^2 / (sin^2(pi theta) L^2)
      double g = 2.0;
      if (aL > 0.0) {
        const double inv_m = (sn * aL / kPi) * (sn * aL / kPi);
        g = inv_m >= 1.0 ? kPi / (sn * aL) : 2.0 / (1.0 + inv_m);
      }
      return lead * 0.5 * d * g;
    }
    case SchechterKind::upper_H: {
      const double body = (sn / kPi) * (aL + std::sqrt(kPi * kPi / (sn * sn) + L * L));
      return (reading == HReading::printed_lambda ? std::exp(L) : lead) * body;
    }
    case SchechterKind::lower_h2:
      return lead * d / std::sqrt(1.0 + d * d * L * L);
    case SchechterKind::upper_H2:
      return lead * std::sqrt(1.0 + d * d * L * L);
  }
  return 0.0;
}

double inverse_or_zero(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

}  // namespace

CoupleParams::CoupleParams(double theta, double lambda) : theta_(theta), lambda_(lambda) {
  check_theta(theta);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be positive and finite");
  }
}

double inverse_map_derivative(double theta) { return 2.0 * std::sin(kPi * theta) / kPi; }

double pair_norm(const PairValue& pv, const CoupleParams& cp, PairFlavor flavor) {
  const double L = std::log(cp.lambda());
  const complex w = pv.v + L * inverse_map_derivative(cp.theta()) * pv.u;
  const double lead = std::exp(cp.theta() * L);
  const double au = std::abs(pv.u);
  const double aw = std::abs(w);
  if (flavor == PairFlavor::sup) {
    return lead * 0.5 * (aw + std::sqrt(aw * aw + 4.0 * au * au));
  }
  return lead * std::hypot(au, aw);
}

double schechter_norm(const CoupleParams& cp, SchechterKind kind, HReading reading) {
  return norm_from_log(std::log(cp.lambda()), cp.theta(), kind, reading);
}

double schechter_norm_at(double lambda, double theta, SchechterKind kind, HReading reading) {
  check_theta(theta);
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be non-negative and finite");
  }
  return norm_from_log(std::log(lambda), theta, kind, reading);
}

EndpointLimits endpoint_limits(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("endpoint_limits: lambda must be positive and finite");
  }
  constexpr std::array<double, 3> thetas = {1e-2, 1e-3, 1e-4};
  // Lagrange weights for the value at theta = 0 of the interpolating quadratic.
  std::array<double, 3> lw{};
  for (std::size_t i = 0; i < 3; ++i) {
    double c = 1.0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) {
        c *= (0.0 - thetas[j]) / (thetas[i] - thetas[j]);
      }
    }
    lw[i] = c;
  }
  auto extrapolate = [&](SchechterKind kind, bool divide) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double v = schechter_norm(CoupleParams(thetas[i], lambda), kind);
      acc += lw[i] * (divide ? v / thetas[i] : v);
    }
    return acc;
  };
  return {extrapolate(SchechterKind::lower_h, true), extrapolate(SchechterKind::upper_H, false),
          extrapolate(SchechterKind::lower_h2, true), extrapolate(SchechterKind::upper_H2, false)};
}

double schechter_coefficient(double theta, double p0, double p1) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw DomainError("schechter_coefficient: theta must lie in [0, 1]");
  }
  if (!(p0 >= 1.0) || !(p1 >= 1.0)) {
    throw DomainError("schechter_coefficient: exponents must be >= 1");
  }
  if (std::isinf(p0) && std::isinf(p1)) {
    throw DomainError("schechter_coefficient: at most one exponent may be infinite");
  }
  if (std::isinf(p1)) {
    if (theta == 1.0) {
      throw DomainError("schechter_coefficient: theta = 1 with p1 = inf");
    }
    return theta / (1.0 - theta);
  }
  if (std::isinf(p0)) {
    return theta > 0.0 ? 1.0 : 0.0;
  }
  return theta * std::abs(p1 - p0) / ((1.0 - theta) * p1 + theta * p0);
}

double schechter_lp_functional(const grid::GridFunction& f, double theta, double p0, double p1) {
  const double coeff = schechter_coefficient(theta, p0, p1);
  const double inv = (1.0 - theta) * inverse_or_zero(p0) + theta * inverse_or_zero(p1);
  const double p = inv > 0.0 ? 1.0 / inv : std::numeric_limits<double>::infinity();
  const double nf = grid::lp_norm(f, p);
  if (!(nf > 0.0)) {
    throw DomainError("schechter_lp_functional: f is identically zero");
  }
  std::vector<complex> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const complex z = f.samples()[i];
    const double a = std::abs(z);
    g[i] = a > 0.0 ? z * std::log(a / nf) : complex(0.0);
  }
  return nf + coeff * grid::lp_norm(f.with_samples(std::move(g)), p);
}

WeightedCouple::WeightedCouple(double p_, std::vector<double> w0_, std::vector<double> w1_)
    : p(p_), w0(std::move(w0_)), w1(std::move(w1_)) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw DomainError("WeightedCouple: p must be finite and >= 1");
  }
  if (w0.size() != w1.size()) {
    throw DimensionMismatch("WeightedCouple: w0 and w1 sizes differ");
  }
  for (std::size_t i = 0; i < w0.size(); ++i) {
    if (!(w0[i] >= 0.0) || !std::isfinite(w0[i]) || !(w1[i] >= 0.0) || !std::isfinite(w1[i])) {
      throw DomainError("WeightedCouple: weights must be finite and non-negative");
    }
  }
}

double weighted_couple_norm(const grid::GridFunction& f, const WeightedCouple& wc, double theta,
                            WeightedKind kind, HReading reading) {
  check_theta(theta);
  if (wc.w0.size() != f.size()) {
    throw DimensionMismatch("weighted_couple_norm: weight and function sizes differ");
  }
  const auto skind =
      kind == WeightedKind::delta_prime_lower ? SchechterKind::lower_h : SchechterKind::upper_H;
  const double p = wc.p;
  double mx = 0.0;
  for (const auto& z : f.samples()) {
    mx = std::max(mx, std::abs(z));
  }
  if (mx == 0.0) {
    return 0.0;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = std::abs(f.samples()[i]);
    if (a == 0.0 || wc.w0[i] == 0.0) {
      continue;
    }
    const double L = wc.w1[i] == 0.0 ? -std::numeric_limits<double>::infinity()
                                     : (std::log(wc.w1[i]) - std::log(wc.w0[i])) / p;
    const double factor = norm_from_log(L, theta, skind, reading);
    sum += wc.w0[i] * std::pow(factor * a / mx, p);
  }
  return mx * std::pow(sum * f.cell_volume(), 1.0 / p);
}

}  // namespace multlab::interp
