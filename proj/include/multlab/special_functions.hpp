#pragma once

// Scalar analytic machinery: complex Gamma, the strip-to-disk conformal map,
// the Poisson majorant of |y|^s on the right half-plane and the two extremal
// problems (scalar infimum and Schwarz-Pick) behind the interpolation norms.

#include <complex>
#include <utility>

#include "multlab/errors.hpp"

namespace multlab::special {

using complex = std::complex<double>;

/// Interior point of the unit interval, 0 < theta < 1.
class StripParameter {
 public:
  explicit StripParameter(double theta);
  double value() const noexcept { return theta_; }

 private:
  double theta_;
};

/// Exponent of the harmonic majorant, 0 < s < 1.
class MajorantParameter {
 public:
  explicit MajorantParameter(double s);
  double value() const noexcept { return s_; }

 private:
  double s_;
};

/// Point alpha + i t of the closed right half-plane.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double alpha, double t);
  double alpha() const noexcept { return alpha_; }
  double t() const noexcept { return t_; }
  complex z() const noexcept { return {alpha_, t_}; }

 private:
  double alpha_;
  double t_;
};

// --- Gamma ----------------------------------------------------------------

/// log Gamma(z) from a 15-term Lanczos sum (g = 607/128), with the reflection
/// formula for Re z < 1/2. exp(log_gamma(z)) reproduces Gamma(z) to ~1e-14
/// relative for |z| <= 1e3. Throws PoleError at non-positive integers.
complex log_gamma(complex z);

/// Gamma(z) = exp(log_gamma(z)).
complex gamma(complex z);

// --- strip <-> disk ---------------------------------------------------------

/// The conformal map of the strip 0 < Re z < 1 onto the unit disk with
/// theta -> 0. Boundary lines go to the unit circle. Throws DomainError when
/// Re z lies outside [0, 1].
complex strip_to_disk(StripParameter theta, complex z);

/// Inverse of strip_to_disk; |zeta| <= 1 required.
complex disk_to_strip(StripParameter theta, complex zeta);

struct CenterDerivatives {
  double forward;  ///< |phi'_theta(theta)| = pi / (2 sin(pi theta))
  double inverse;  ///< |(phi_theta^{-1})'(0)| = 2 sin(pi theta) / pi
};

CenterDerivatives derivative_at_center(StripParameter theta);

// --- harmonic majorant --------------------------------------------------------

/// psi_s(x, y) = (1/pi) int x / (x^2 + t^2) |y + t|^s dt for x > 0.
///
/// The finite part is integrated after t = x tan u with a breakpoint at the
/// cusp t = -y; the algebraic tails beyond |t| = T are summed from their
/// convergent expansion in 1/t. Relative error is near machine precision for
/// x / |x + iy| >= 1e-8; closer to the boundary line a QuadratureError may be
/// thrown with the achieved bound.
double poisson_majorant(MajorantParameter s, double x, double y);

struct MajorantConstants {
  double psi_at_1_0;      ///< (2/pi) int_0^inf t^s / (1 + t^2) dt
  double phi_prime_at_1;  ///< |(1/pi) int_0^inf (u^{s/2+1/2} - u^{s/2-1/2}) / (1+u)^2 du|
};

MajorantConstants majorant_constants(MajorantParameter s);

// --- extremal problems --------------------------------------------------------

struct ExtremalSolution {
  double value;   ///< inf_a |1+a| + sqrt((1+a)^2 + M a^2)
  double argmin;  ///< a minimizing point
};

/// Objective of the scalar extremal problem, exposed for oracles.
double extremal_objective(double M, double a);

/// Closed-form minimizer: sqrt(M) at a = -1 for M <= 1, 2M/(M+1) at
/// a = -2/(M+1) for M > 1. Throws DomainError for M < 0.
ExtremalSolution extremal_infimum(double M);

/// Holomorphic self-map of the unit disk with Psi(0) = u and Psi'(0) = v.
///
/// For |u|^2 + |v| = 1 this is the rotated disk automorphism taking 0 to u;
/// interior data are scaled onto the boundary and the map is scaled back, so
/// sup |Psi| = (|v| + sqrt(|v|^2 + 4|u|^2)) / 2 <= 1.
class DiskExtremal {
 public:
  DiskExtremal(complex u, complex v);

  complex operator()(complex zeta) const;
  complex derivative(complex zeta) const;

  /// sup over the unit disk of |Psi|.
  double sup_modulus() const noexcept { return 1.0 / scale_; }

 private:
  complex u_scaled_;
  complex rotation_;  // v/|v|, or 0 for the constant map
  double scale_;      // mu >= 1 with |mu u|^2 + |mu v| = 1
};

/// Throws DomainError when |u|^2 + |v| > 1.
DiskExtremal schwarz_pick_extremal(complex u, complex v);

/// rho(z) = z^s on the principal branch (arg in (-pi, pi]); maps the right
/// half-plane onto the sector |arg w| < s pi / 2.
complex sector_map(double s, complex z);

}  // namespace multlab::special
