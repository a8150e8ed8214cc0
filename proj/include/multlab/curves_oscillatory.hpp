#pragma once

// Singular integrals along curves: principal-value symbols, the divergence
// witness for bounded components, the dyadic counterexample norms and dense
// oscillatory / moment operators on a one-dimensional grid.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "multlab/errors.hpp"
#include "multlab/special_functions.hpp"

namespace multlab::curves {

using complex = std::complex<double>;
using RealFn = std::function<double(double)>;

struct CurveSpec {
  std::vector<RealFn> gamma;  // components gamma_1..gamma_n
  RealFn K;
  double eps;                       // truncation, 0 < eps < 1
  std::vector<double> breakpoints;  // extra positive split points (kinks)
};

struct QuadValue {
  complex value;
  double error;
};

/// p.v. int_{eps<|u|<1/eps} e^{i gamma(u).xi} K(u) du, pairing u with -u on
/// geometric pieces of [eps, 1/eps]. Throws QuadratureError when the
/// achieved error exceeds 1e-7.
QuadValue curve_symbol(const CurveSpec& c, const std::vector<double>& xi);

enum class TrigFlavor { cos, sin };

/// int_{eps<|u|<1/eps} e^{it trig(gamma(u).xi)} K(u) du.
QuadValue sincos_symbol(const CurveSpec& c, double t, const std::vector<double>& xi,
                        TrigFlavor flavor);

/// int_{eps<|u|<1/eps} |K(u)| du.
double kernel_l1(const CurveSpec& c);

/// int_{eps<|u|<1/eps} gamma_j(u) K(u) du.
double component_integral(const CurveSpec& c, std::size_t j);

struct DivergenceRow {
  double eps;
  double I;  // int gamma_j K over the annulus
  double S;  // max over the xi grid of |m_{gamma, eps}(xi)|
};

/// Throws DomainError when gamma_j is unbounded on its samples.
std::vector<DivergenceRow> divergence_witness(const CurveSpec& c, std::size_t j,
                                              const std::vector<double>& eps_list,
                                              const std::vector<std::vector<double>>& xi_grid);

struct CounterexampleParams {
  long long J;
  special::HalfPlanePoint z;
  CounterexampleParams(long long J_, special::HalfPlanePoint z_);
};

struct CounterexampleNorms {
  double l1_exact;     // sum_j j^{alpha-2} log 2 / |Gamma(1 + alpha + it)|
  double l1_l2_bound;  // sum_j j^{alpha-2} 2^{-(j+1)/2} / |Gamma(1 + alpha + it)|
};

CounterexampleNorms counterexample_norms(const CounterexampleParams& p);

struct UnboundednessRow {
  double R;
  double l1;  // int_1^R dx / x by quadrature
};

std::vector<UnboundednessRow> counterexample_unboundedness(const std::vector<double>& R_list);

// --- dense oscillatory operators -----------------------------------------------------

using Kernel2 = std::function<double(double, double)>;
using Matrix = Eigen::MatrixXcd;

constexpr std::size_t kMaxDenseGrid = 2048;

/// x_i = -pi + 2 pi i / N.
std::vector<double> operator_grid(std::size_t N);

/// Entries h K(x,y) e^{itQ(x,y)}, h = 2 pi / N, zero diagonal.
Matrix oscillatory_operator(const Kernel2& K, const Kernel2& Q, double t, std::size_t N);

/// Entries h K(x,y) Q(x,y)^n, zero diagonal.
Matrix moment_operator(const Kernel2& K, const Kernel2& Q, int n, std::size_t N);

/// Entries h K(x,y) (e^{zQ(x,y)} - A(z,x)); A(z, x) = e^{z Q(x,x)} by default.
Matrix afo_operator(const Kernel2& K, const Kernel2& Q, complex z, std::size_t N,
                    const std::function<complex(complex, double)>& A = {});

/// Largest singular value by power iteration on A^* A.
double spectral_norm(const Matrix& A, double rel_tol = 1e-12, int max_iter = 20000);

struct MomentGrowth {
  std::vector<double> norms;  // ||H_{KQ^n}||, n = 1..n_max
  double base_fit;            // exp of the least-squares slope of log norm in n
  double base_sup;            // max_n norm^{1/n}
};

MomentGrowth moment_growth(const Kernel2& K, const Kernel2& Q, int n_max, std::size_t N);

struct TaylorCheck {
  double difference;   // ||T_{K,tQ} - sum_{n<=order} (it)^n / n! H_{KQ^n}||
  double remainder;    // e^{|t| q} (|t| q)^{order+1} / (order+1)!, q = max |Q|
  double abs_kernel;   // || h|K| || (spectral), bounds the entrywise remainder
  double roundoff;     // 4 (order + 2) eps_mach e^{|t| q}, entrywise floating-point slack

  /// difference <= (remainder + roundoff) * abs_kernel
  bool holds() const { return difference <= (remainder + roundoff) * abs_kernel; }
};

TaylorCheck taylor_consistency(const Kernel2& K, const Kernel2& Q, double t, int order,
                               std::size_t N);

struct PhaseRemovalRow {
  int n;
  double norm;   // ||H_{K cos^n Q}||
  double bound;  // D^n
};

struct PhaseRemoval {
  double A;  // max_{|k| <= n_max} ||T_{K,kQ}||
  double D;  // (A^2 + 1) / A
  std::vector<PhaseRemovalRow> rows;
};

PhaseRemoval phase_removal_check(const Kernel2& K, const Kernel2& Q, int n_max, std::size_t N);

}  // namespace multlab::curves
