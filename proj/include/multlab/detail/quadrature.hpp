#pragma once

// Thin wrappers over Boost.Math quadrature that turn a missed tolerance into
// a QuadratureError instead of a silently degraded value.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "multlab/errors.hpp"

namespace multlab::detail {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

struct ComplexQuadResult {
  std::complex<double> value{};
  double error = 0.0;
};

/// Tanh-sinh on [a, b]. `f(x, xc)` receives the signed distance `xc` to the
/// nearest endpoint (negative near `a`), so integrands with endpoint
/// singularities can be evaluated without cancellation.
template <class F>
QuadResult tanh_sinh_integrate(F&& f, double a, double b, double tol, const char* context,
                               double fail_threshold) {
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator(15);
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double v = integrator.integrate(f, a, b, tol, &error, &l1, &levels);
  if (!std::isfinite(v) || error > fail_threshold) {
    throw QuadratureError(std::string(context) + ": tanh-sinh did not converge", error);
  }
  return {v, error};
}

namespace quad_impl {

template <class F>
ComplexQuadResult adaptive_gk(const F& f, double a, double b, double abs_tol, unsigned depth) {
  double err = 0.0;
  const std::complex<double> v =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err);
  // Boost reports the Kronrod-Gauss difference on the reference interval.
  err *= 0.5 * (b - a);
  if (err <= abs_tol || depth == 0) {
    return {v, err};
  }
  const double mid = 0.5 * (a + b);
  const auto left = adaptive_gk(f, a, mid, 0.5 * abs_tol, depth - 1);
  const auto right = adaptive_gk(f, mid, b, 0.5 * abs_tol, depth - 1);
  return {left.value + right.value, left.error + right.error};
}

}  // namespace quad_impl

/// Adaptive 15-point Gauss-Kronrod with an absolute tolerance; integrand may
/// be real or complex valued.
template <class F>
ComplexQuadResult gauss_kronrod_integrate(const F& f, double a, double b, double abs_tol,
                                          unsigned max_depth = 40) {
  auto wrapped = [&f](double x) { return std::complex<double>(f(x)); };
  return quad_impl::adaptive_gk(wrapped, a, b, abs_tol, max_depth);
}

/// Fixed 20-point Gauss-Legendre on [a, b].
template <class F>
auto gauss_legendre(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

}  // namespace multlab::detail
