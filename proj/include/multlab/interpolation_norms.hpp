#pragma once

// Closed-form derivative-space norms for the scalar couple (C, lambda C),
// their quadratic (p = 2 Hardy) variants, the weighted L^p couple and the
// theta -> 0 endpoint limits.

#include <complex>
#include <vector>

#include "multlab/errors.hpp"
#include "multlab/grid_spaces.hpp"

namespace multlab::interp {

using complex = std::complex<double>;

class CoupleParams {
 public:
  CoupleParams(double theta, double lambda);
  double theta() const noexcept { return theta_; }
  double lambda() const noexcept { return lambda_; }

 private:
  double theta_;
  double lambda_;
};

struct PairValue {
  complex u;
  complex v;
};

enum class PairFlavor { sup, quadratic };
enum class SchechterKind { lower_h, upper_H, lower_h2, upper_H2 };

/// Which leading factor H carries: lambda^theta (as the norm of (1, 0)
/// computes) or the bare lambda of the printed statement.
enum class HReading { lambda_theta, printed_lambda };

/// |(phi_theta^{-1})'(0)| = 2 sin(pi theta) / pi.
double inverse_map_derivative(double theta);

/// sup: lambda^theta (|w| + sqrt(|w|^2 + 4|u|^2)) / 2, quadratic:
/// lambda^theta sqrt(|u|^2 + |w|^2), where w = v + log(lambda) phi'(0) u.
double pair_norm(const PairValue& pv, const CoupleParams& cp, PairFlavor flavor);

double schechter_norm(const CoupleParams& cp, SchechterKind kind,
                      HReading reading = HReading::lambda_theta);

/// h and H at lambda = 0 (their lambda -> 0+ limits, both zero).
double schechter_norm_at(double lambda, double theta, SchechterKind kind,
                         HReading reading = HReading::lambda_theta);

struct EndpointLimits {
  double h_over_theta;
  double H;
  double h2_over_theta;
  double H2;
};

/// Quadratic extrapolation to theta = 0 from theta in {1e-2, 1e-3, 1e-4}.
EndpointLimits endpoint_limits(double lambda);

/// ||f||_{p(theta)} + coeff ||f log(|f| / ||f||_{p(theta)})||_{p(theta)} with
/// 1/p(theta) = (1-theta)/p0 + theta/p1 and
/// coeff = theta |p1 - p0| / ((1-theta) p1 + theta p0).
double schechter_lp_functional(const grid::GridFunction& f, double theta, double p0, double p1);

/// The coefficient above, with its limits when p0 or p1 is infinite.
double schechter_coefficient(double theta, double p0, double p1);

struct WeightedCouple {
  double p;
  std::vector<double> w0;  // >= 0
  std::vector<double> w1;  // > 0 almost everywhere

  WeightedCouple(double p, std::vector<double> w0, std::vector<double> w1);
};

enum class WeightedKind { delta_prime_lower, delta_prime_upper };

/// L^p norm of f against w0 h(lambda(x), theta)^p (lower) or
/// w0 H(lambda(x), theta)^p (upper), lambda = (w1 / w0)^{1/p}, lambda = 0
/// where w0 = 0.
double weighted_couple_norm(const grid::GridFunction& f, const WeightedCouple& wc, double theta,
                            WeightedKind kind, HReading reading = HReading::lambda_theta);

}  // namespace multlab::interp
