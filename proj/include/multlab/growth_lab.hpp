#pragma once

// Unimodular-symbol experiments: growth curves ||e^{itm}|| in t, fits of
// N(t) <= A exp(c |t|^s), cosine power expansions, cube indicators,
// extrapolation bound transfers and derived symbols.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "multlab/grid_spaces.hpp"

namespace multlab::growth {

using complex = std::complex<double>;
using grid::NormBudget;
using grid::NormEstimate;
using grid::Symbol;
using grid::Weight;

struct GrowthBound {
  double A;
  double c;
  double s;
};

struct GrowthSample {
  double t;
  NormEstimate estimate;
};

struct GrowthCurve {
  std::vector<GrowthSample> samples;
};

/// Nondecreasing tabulated function on [1, inf). Evaluation interpolates
/// linearly, clamps below the first node and continues the last segment
/// beyond the final one.
class BoundFunction {
 public:
  BoundFunction(std::vector<double> t, std::vector<double> value);
  static BoundFunction identity(std::vector<double> t);

  double operator()(double t) const;
  const std::vector<double>& nodes() const noexcept { return t_; }
  const std::vector<double>& values() const noexcept { return value_; }
  bool nondecreasing() const noexcept;

 private:
  std::vector<double> t_;
  std::vector<double> value_;
};

/// Pointwise e^{itm}; throws DomainError when m is not real.
Symbol unimodular_symbol(const Symbol& m, double t);

/// multiplier_norm of e^{itm} for each t (strictly increasing).
GrowthCurve growth_curve(const Symbol& m, double p, const Weight& w,
                         const std::vector<double>& t_grid, const NormBudget& budget = {});

enum class FitMode { envelope, lsq };

std::string to_string(FitMode mode);

/// envelope: for each s on a 1e-3 grid the line a + c t^s lying above every
/// (t^s, log N) that minimizes the summed gap; the s with the smallest gap
/// wins (ties to smaller s) and A is the least value for which every stored
/// sample satisfies N <= A exp(c t^s). lsq: regression of
/// log log(N / A0) on log t, A0 chosen to minimise the residual.
/// s is capped at 1.
GrowthBound fit_exponential_power(const GrowthCurve& curve, FitMode mode);

/// Same fit from bare (t, N) pairs.
GrowthBound fit_exponential_power(const std::vector<double>& t, const std::vector<double>& N,
                                  FitMode mode);

struct CosineTerm {
  int frequency;  // k - 2j
  double coefficient;  // binom(k, j) / 2^k
};

/// (cos x)^k = sum_j binom(k,j) 2^{-k} cos((k - 2j) x), j = 0..k.
std::vector<CosineTerm> cosine_power_expand(int k);

double evaluate_cosine_expansion(const std::vector<CosineTerm>& terms, double x);

/// Indicator of |frequency| <= R/2 on every axis.
Symbol cube_indicator_symbol(double R, const std::vector<std::size_t>& dims);

struct CubeRow {
  double R;
  double value;
  grid::EstimateKind kind;
};

std::vector<CubeRow> cube_norm_study(const std::vector<double>& R_list,
                                     const std::vector<std::size_t>& dims, double p,
                                     const Weight& w, const NormBudget& budget = {});

struct TransferConstants {
  double C1 = 1.0;
  double C2 = 1.0;
};

/// t -> psi(C1 t^{(p0-1)/(p-1)}) for p < p0, t -> psi(C2 t) for p > p0 and
/// psi itself for p = p0.
BoundFunction rf_transfer(const BoundFunction& psi, double p0, double p,
                          const TransferConstants& k = {});

/// Exponent of the A_p bound table selected by the relative position of
/// p0, 2 and p; throws DomainError on ties.
double ap_table_exponent(double p0, double p);

/// t -> psi(C t^{e}) with e = ap_table_exponent(p0, p).
BoundFunction ap_table(const BoundFunction& psi, double p0, double p, double C = 1.0);

/// Pointwise m^a (log m)^n; m must be real and strictly positive.
Symbol power_log_symbols(const Symbol& m, double a, int n);

struct TabulatedKernel {
  std::vector<double> x;
  std::vector<complex> phi;
  double dx;
};

/// Midpoint samples of e^{-lambda x} on (0, x_max).
TabulatedKernel exponential_kernel(double lambda, double dx, double x_max);

/// xi -> sum_k phi(x_k) e^{-i m(xi) x_k} dx. Throws DomainError when
/// sum |phi(x_k)| e^{|x_k|^s} is not finite.
Symbol mollified_symbol(const TabulatedKernel& phi, const Symbol& m, double s = 1.0);

}  // namespace multlab::growth
