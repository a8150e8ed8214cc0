#pragma once

// Spherical-harmonic side of rough singular integrals: multiplier
// coefficients gamma_j, m_Omega = sum i^{-j} gamma_j Y_j, Sobolev norms,
// Laplace-Beltrami powers and growth of Delta e^{itm} in t.
//
// Bases are orthonormal for the normalized surface measure:
//   S^1 (n = 2): e^{i j theta}, j >= 0;
//   S^3 zonal (n = 4): U_j(cos theta) = sin((j+1) theta) / sin theta with
//   density (2/pi) sin^2 theta on [0, pi].

#include <complex>
#include <vector>

#include "multlab/errors.hpp"

namespace multlab::sphere {

using complex = std::complex<double>;

class ZonalExpansion {
 public:
  /// n in {2, 4}; with `cancellation` set, coeffs[0] must vanish.
  ZonalExpansion(int n, std::vector<complex> coeffs, bool cancellation = true);

  int n() const noexcept { return n_; }
  const std::vector<complex>& coeffs() const noexcept { return coeffs_; }
  bool cancellation() const noexcept { return cancellation_; }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

 private:
  int n_;
  std::vector<complex> coeffs_;
  bool cancellation_;
};

struct LatitudeGrid {
  int n;
  std::vector<double> nodes;    // theta_k
  std::vector<double> weights;  // sum to 1
};

/// S^1: N equispaced angles on [0, 2pi). S^3: theta_k = k pi / (N+1),
/// k = 1..N, with weights 2 sin^2(theta_k) / (N+1) (Gauss-Jacobi in cos theta).
LatitudeGrid make_latitude_grid(int n, std::size_t size);

/// pi^{n/2} Gamma(j/2) / Gamma((j+n)/2) as the finite product
/// pi^{n/2} / prod_{k<n/2} (j/2 + k).
double gamma_coefficient(int j, int n);

/// a_j -> i^{-j} gamma_j a_j; throws DomainError without cancellation.
ZonalExpansion symbol_from_omega(const ZonalExpansion& omega);

/// (sum (1+j)^{2s} |a_j|^2)^{1/2}.
double sphere_sobolev_norm(const ZonalExpansion& e, double s);

/// Eigenvalue j(j+n-2) of -Delta on degree j.
double laplace_eigenvalue(int j, int n);

/// a_j -> (j(j+n-2))^r a_j; throws DomainError when a_0 != 0.
ZonalExpansion laplace_power(const ZonalExpansion& e, double r);

/// ||Omega||_2^2 / ||Delta^{n/4} m_Omega||_2^2 in coefficient space.
double omom_ratio(const ZonalExpansion& omega);

/// Samples of the expansion at the grid nodes; AliasingError when the grid
/// has fewer than 4J nodes.
std::vector<complex> evaluate_zonal(const ZonalExpansion& e, const LatitudeGrid& grid);

/// Coefficients j = 0..J from samples by the grid quadrature.
ZonalExpansion project_zonal(const std::vector<complex>& samples, const LatitudeGrid& grid,
                             std::size_t J, bool cancellation = false);

/// d/dtheta of a zonal S^3 expansion at the grid nodes.
std::vector<complex> zonal_theta_derivative(const ZonalExpansion& e, const LatitudeGrid& grid);

struct SphereGrowthOptions {
  std::size_t grid_size = 4096;
  std::size_t work_degree = 1024;
  double tail_tolerance = 1e-24;  // relative energy in the top quarter of degrees
};

struct SphereGrowthRow {
  double t;
  double norm;           // ||Delta (e^{itm} - mean)||_2
  double tail_fraction;  // relative energy above 3J/4
};

struct SphereGrowthTable {
  std::vector<SphereGrowthRow> rows;
  double exponent;  // least-squares slope of log norm against log t over t > 0
};

/// For each t: e^{itm} on the grid, mean removed, Delta applied spectrally,
/// L^2 norm. m must be a real-valued n = 4 expansion.
SphereGrowthTable unimodular_sphere_growth(const ZonalExpansion& m,
                                           const std::vector<double>& t_grid,
                                           const SphereGrowthOptions& opt = {});

/// max_k |Delta e^{itm} - (it e^{itm} Delta m - t^2 e^{itm} (dm/dtheta)^2)|
/// divided by max_k of the right-hand side, on the growth grid.
double leibniz_residual(const ZonalExpansion& m, double t, const SphereGrowthOptions& opt = {});

/// Omega on S^3 normalized to ||Omega||_2 = 1.
ZonalExpansion normalized(const ZonalExpansion& omega);

}  // namespace multlab::sphere
