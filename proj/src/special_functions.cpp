#include "multlab/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "multlab/detail/quadrature.hpp"

namespace multlab::special {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

bool is_nonpositive_integer(complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// log Gamma(w + 1) for Re w >= -1/2.
complex log_gamma_lanczos(complex w) {
  complex sum = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    sum += kLanczosCoeffs[k] / (w + static_cast<double>(k));
  }
  const complex t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) without overflow for large |Im z|.
complex log_sin_pi(complex z) {
  const complex i(0.0, 1.0);
  if (z.imag() > 1.0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i), |e^{2 i pi z}| < 1
    return -i * kPi * z + std::log((std::exp(2.0 * i * kPi * z) - 1.0) / (2.0 * i));
  }
  if (z.imag() < -1.0) {
    return i * kPi * z + std::log((1.0 - std::exp(-2.0 * i * kPi * z)) / (2.0 * i));
  }
  return std::log(std::sin(kPi * z));
}

complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

StripParameter::StripParameter(double theta) : theta_(theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw DomainError("strip parameter theta must lie in (0, 1), got " + std::to_string(theta));
  }
}

MajorantParameter::MajorantParameter(double s) : s_(s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError("majorant exponent s must lie in (0, 1), got " + std::to_string(s));
  }
}

HalfPlanePoint::HalfPlanePoint(double alpha, double t) : alpha_(alpha), t_(t) {
  if (!(alpha >= 0.0) || !std::isfinite(t)) {
    throw DomainError("half-plane point needs alpha >= 0 and finite t");
  }
}

complex log_gamma(complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(-z);
  }
  return log_gamma_lanczos(z - 1.0);
}

complex gamma(complex z) { return std::exp(log_gamma(z)); }

complex strip_to_disk(StripParameter theta, complex z) {
  if (!(z.real() >= 0.0 && z.real() <= 1.0)) {
    throw DomainError("strip_to_disk: Re z must lie in [0, 1]");
  }
  const complex i(0.0, 1.0);
  const complex a = unit_phase(kPi * theta.value());
  const complex abar = std::conj(a);
  if (z.imag() >= 0.0) {
    // |e^{i pi z}| <= 1
    const complex w = std::exp(i * kPi * z);
    return (w - a) / (w - abar);
  }
  const complex winv = std::exp(-i * kPi * z);
  return (1.0 - a * winv) / (1.0 - abar * winv);
}

complex disk_to_strip(StripParameter theta, complex zeta) {
  if (!(std::abs(zeta) <= 1.0 + 1e-12) || zeta == complex(1.0, 0.0)) {
    throw DomainError("disk_to_strip: zeta must lie in the closed disk minus the point 1");
  }
  const complex a = unit_phase(kPi * theta.value());
  const complex w = (a - zeta * std::conj(a)) / (1.0 - zeta);
  // w lies in the closed upper half-plane; clean round-off below the axis.
  double arg = std::arg(w);
  if (arg < 0.0) {
    arg = arg < -0.5 * kPi ? kPi : 0.0;
  }
  return {arg / kPi, -std::log(std::abs(w)) / kPi};
}

CenterDerivatives derivative_at_center(StripParameter theta) {
  const double sn = std::sin(kPi * theta.value());
  return {kPi / (2.0 * sn), 2.0 * sn / kPi};
}

double poisson_majorant(MajorantParameter sp, double x, double y) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("poisson_majorant: x must be positive");
  }
  if (!std::isfinite(y)) {
    throw DomainError("poisson_majorant: y must be finite");
  }
  const double s = sp.value();
  const double T = 4.0 * (std::abs(y) + x) + 1.0;

  // Tails |t| > T: x/(x^2+t^2) |y+t|^s expanded in 1/t; odd powers of y
  // cancel between the two tails.
  double tail = 0.0;
  {
    const double q = -(x * x) / (T * T);
    const double r = y / T;
    double qk = 1.0;
    for (int k = 0; k < 40; ++k) {
      double binom = 1.0;  // binom(s, m)
      double rm = 1.0;
      double inner = 0.0;
      for (int m = 0; m < 80; ++m) {
        if (m % 2 == 0) {
          inner += binom * rm / (1.0 + 2.0 * k + m - s);
        }
        binom *= (s - m) / (m + 1.0);
        rm *= r;
      }
      const double term = qk * inner;
      tail += term;
      if (std::abs(term) < 1e-18 * std::abs(tail)) {
        break;
      }
      qk *= q;
    }
    tail *= 2.0 * x * std::pow(T, s - 1.0);
  }

  // |t| <= T after t = x tan u; cusp at u0 where y + x tan u0 = 0.
  // cos u is rebuilt from the distance to the nearer endpoint so that it keeps
  // full relative accuracy when x is small and u approaches +-pi/2.
  const double U = std::atan(T / x);
  const double eU = std::atan(x / T);  // pi/2 - U
  const double u0 = std::atan(-y / x);
  const double rho = std::hypot(x, y);
  const double cos_u0 = x / rho;
  const double sin_u0 = -y / rho;
  // On [u0, U]: |y + x tan u| = x sin(u - u0) / (cos u cos u0).
  auto right = [&](double u, double uc) {
    double d, cos_u;
    if (uc < 0.0) {
      d = -uc;
      cos_u = cos_u0 * std::cos(d) - sin_u0 * std::sin(d);
    } else {
      d = u - u0;
      cos_u = std::sin(eU + uc);
    }
    return std::pow(x * std::sin(d) / (cos_u * cos_u0), s);
  };
  // On [-U, u0]: |y + x tan u| = x sin(u0 - u) / (cos u cos u0).
  auto left = [&](double u, double uc) {
    double d, cos_u;
    if (uc > 0.0) {
      d = uc;
      cos_u = cos_u0 * std::cos(d) + sin_u0 * std::sin(d);
    } else {
      d = u0 - u;
      cos_u = std::sin(eU - uc);
    }
    return std::pow(x * std::sin(d) / (cos_u * cos_u0), s);
  };
  constexpr double kTol = 1e-13;
  constexpr double kFail = 1e-9;
  double middle = 0.0;
  if (U - u0 > 0.0) {
    middle += detail::tanh_sinh_integrate(right, u0, U, kTol, "poisson_majorant", kFail).value;
  }
  if (u0 + U > 0.0) {
    middle += detail::tanh_sinh_integrate(left, -U, u0, kTol, "poisson_majorant", kFail).value;
  }
  return (middle + tail) / kPi;
}

MajorantConstants majorant_constants(MajorantParameter sp) {
  const double s = sp.value();

  // (2/pi) int_0^inf t^s/(1+t^2): [0, 2] by tanh-sinh, the tail by its
  // alternating expansion in t^{-2}.
  constexpr double T = 2.0;
  auto head_integrand = [s](double t, double tc) {
    const double tt = tc < 0.0 ? -tc : t;
    return std::pow(tt, s) / (1.0 + t * t);
  };
  const double head =
      detail::tanh_sinh_integrate(head_integrand, 0.0, T, 1e-14, "majorant_constants", 1e-10)
          .value;
  double tail = 0.0;
  double sign = 1.0;
  for (int k = 0; k < 60; ++k) {
    tail += sign * std::pow(T, s - 1.0 - 2.0 * k) / (1.0 + 2.0 * k - s);
    sign = -sign;
  }
  const double psi = 2.0 / kPi * (head + tail);

  // Fold [1, inf) onto (0, 1] with u -> 1/u. Each power u^c is integrated
  // against (1+u)^{-2} on [0, 1/2] by its binomial series and on [1/2, 1] by
  // Gauss-Legendre.
  const double a = 0.5 * (s - 1.0);
  const std::array<double, 4> exponents = {a + 1.0, a, -a - 1.0, -a};
  const std::array<double, 4> signs = {1.0, -1.0, 1.0, -1.0};
  constexpr double delta = 0.5;
  double total = 0.0;
  for (std::size_t e = 0; e < exponents.size(); ++e) {
    const double c = exponents[e];
    double series = 0.0;
    double dk = std::pow(delta, c + 1.0);
    double alt = 1.0;
    for (int k = 0; k < 80; ++k) {
      series += alt * (k + 1.0) * dk / (c + k + 1.0);
      dk *= delta;
      alt = -alt;
    }
    const double upper = detail::gauss_legendre(
        [c](double u) { return std::pow(u, c) / ((1.0 + u) * (1.0 + u)); }, delta, 1.0);
    total += signs[e] * (series + upper);
  }
  return {psi, std::abs(total) / kPi};
}

double extremal_objective(double M, double a) {
  return std::abs(1.0 + a) + std::sqrt((1.0 + a) * (1.0 + a) + M * a * a);
}

ExtremalSolution extremal_infimum(double M) {
  if (!(M >= 0.0)) {
    throw DomainError("extremal_infimum: M must be non-negative");
  }
  if (M <= 1.0) {
    return {std::sqrt(M), -1.0};
  }
  return {2.0 * M / (M + 1.0), -2.0 / (M + 1.0)};
}

DiskExtremal::DiskExtremal(complex u, complex v) {
  const double au = std::abs(u);
  const double av = std::abs(v);
  if (au * au + av > 1.0 + 1e-14) {
    throw DomainError("schwarz_pick_extremal: |u|^2 + |v| must not exceed 1");
  }
  if (av == 0.0) {
    // Constant map zeta -> u.
    u_scaled_ = u;
    rotation_ = 0.0;
    scale_ = au > 0.0 ? 1.0 / au : std::numeric_limits<double>::infinity();
    if (au == 0.0) {
      u_scaled_ = 0.0;
    }
    return;
  }
  // mu solves mu^2 |u|^2 + mu |v| = 1.
  scale_ = 2.0 / (av + std::sqrt(av * av + 4.0 * au * au));
  u_scaled_ = scale_ * u;
  rotation_ = v / av;
}

complex DiskExtremal::operator()(complex zeta) const {
  if (rotation_ == complex(0.0, 0.0)) {
    return std::isinf(scale_) ? complex(0.0, 0.0) : u_scaled_;
  }
  const complex num = rotation_ * zeta + u_scaled_;
  const complex den = 1.0 + std::conj(u_scaled_) * rotation_ * zeta;
  return num / den / scale_;
}

complex DiskExtremal::derivative(complex zeta) const {
  if (rotation_ == complex(0.0, 0.0)) {
    return 0.0;
  }
  const complex den = 1.0 + std::conj(u_scaled_) * rotation_ * zeta;
  return rotation_ * (1.0 - std::norm(u_scaled_)) / (den * den) / scale_;
}

DiskExtremal schwarz_pick_extremal(complex u, complex v) { return DiskExtremal(u, v); }

complex sector_map(double s, complex z) {
  if (z == complex(0.0, 0.0)) {
    return 0.0;
  }
  return std::exp(s * std::log(z));
}

}  // namespace multlab::special
