#include "multlab/curves_oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "multlab/detail/quadrature.hpp"

namespace multlab::curves {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPieceTol = 1e-10;
constexpr double kFailTol = 1e-7;

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError("curve truncation eps must lie in (0, 1)");
  }
}

// Split points of [eps, 1/eps]: dyadic multiples of eps plus the kinks.
std::vector<double> pieces(const CurveSpec& c) {
  check_eps(c.eps);
  const double hi = 1.0 / c.eps;
  std::vector<double> pts;
  for (double u = c.eps; u < hi; u *= 2.0) {
    pts.push_back(u);
  }
  pts.push_back(hi);
  for (double b : c.breakpoints) {
    if (b > c.eps && b < hi) {
      pts.push_back(b);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// int_{eps<|u|<1/eps} f(u) du as int_eps^{1/eps} (f(u) + f(-u)) du.
template <class F>
QuadValue symmetric_integral(const CurveSpec& c, F&& f, const char* context) {
  const auto pts = pieces(c);
  auto paired = [&f](double u) { return f(u) + f(-u); };
  complex total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto r = detail::gauss_kronrod_integrate(paired, pts[i], pts[i + 1], kPieceTol);
    total += r.value;
    err += r.error;
  }
  if (!std::isfinite(total.real()) || !std::isfinite(total.imag()) || err > kFailTol) {
    throw QuadratureError(std::string(context) + ": principal-value quadrature failed", err);
  }
  return {total, err};
}

double dot(const CurveSpec& c, double u, const std::vector<double>& xi) {
  double s = 0.0;
  for (std::size_t a = 0; a < xi.size(); ++a) {
    s += c.gamma[a](u) * xi[a];
  }
  return s;
}

void check_xi(const CurveSpec& c, const std::vector<double>& xi) {
  if (xi.size() != c.gamma.size()) {
    throw DimensionMismatch("curve symbol: xi and curve dimensions differ");
  }
}

void check_grid(std::size_t N) {
  if (N < 2 || N > kMaxDenseGrid) {
    throw DomainError("dense operator grid must have between 2 and " +
                      std::to_string(kMaxDenseGrid) + " points, got " + std::to_string(N));
  }
}

template <class Entry>
Matrix assemble(std::size_t N, Entry&& entry) {
  check_grid(N);
  const auto x = operator_grid(N);
  const double h = 2.0 * kPi / static_cast<double>(N);
  Matrix A = Matrix::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j) {
        A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = h * entry(x[i], x[j]);
      }
    }
  }
  return A;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

}  // namespace

QuadValue curve_symbol(const CurveSpec& c, const std::vector<double>& xi) {
  check_xi(c, xi);
  auto f = [&](double u) {
    const double ph = dot(c, u, xi);
    return complex(std::cos(ph), std::sin(ph)) * c.K(u);
  };
  return symmetric_integral(c, f, "curve_symbol");
}

QuadValue sincos_symbol(const CurveSpec& c, double t, const std::vector<double>& xi,
                        TrigFlavor flavor) {
  check_xi(c, xi);
  auto f = [&](double u) {
    const double arg = dot(c, u, xi);
    const double ph = t * (flavor == TrigFlavor::cos ? std::cos(arg) : std::sin(arg));
    return complex(std::cos(ph), std::sin(ph)) * c.K(u);
  };
  return symmetric_integral(c, f, "sincos_symbol");
}

double kernel_l1(const CurveSpec& c) {
  auto f = [&](double u) { return complex(std::abs(c.K(u))); };
  return symmetric_integral(c, f, "kernel_l1").value.real();
}

double component_integral(const CurveSpec& c, std::size_t j) {
  if (j >= c.gamma.size()) {
    throw DomainError("component_integral: component index out of range");
  }
  auto f = [&](double u) { return complex(c.gamma[j](u) * c.K(u)); };
  return symmetric_integral(c, f, "component_integral").value.real();
}

std::vector<DivergenceRow> divergence_witness(const CurveSpec& c, std::size_t j,
                                              const std::vector<double>& eps_list,
                                              const std::vector<std::vector<double>>& xi_grid) {
  if (j >= c.gamma.size()) {
    throw DomainError("divergence_witness: component index out of range");
  }
  double smallest = 1.0;
  for (double e : eps_list) {
    check_eps(e);
    smallest = std::min(smallest, e);
  }
  // Bounded on samples: the sup over the full annulus must not outgrow the sup over the
  // half-logarithmic inner annulus [sqrt(eps), 1/sqrt(eps)].
  const double inner = std::sqrt(smallest);
  double sup_all = 0.0, sup_inner = 0.0;
  for (double u = smallest; u <= 1.0 / smallest; u *= 1.05) {
    for (double v : {u, -u}) {
      const double g = std::abs(c.gamma[j](v));
      if (!std::isfinite(g)) {
        throw DomainError("divergence_witness: component is not finite on its samples");
      }
      sup_all = std::max(sup_all, g);
      if (u >= inner && u <= 1.0 / inner) {
        sup_inner = std::max(sup_inner, g);
      }
    }
  }
  if (sup_all > 1.5 * sup_inner + 1e-3) {
    throw DomainError("divergence_witness: component is not bounded on its samples");
  }
  std::vector<DivergenceRow> rows;
  for (double e : eps_list) {
    CurveSpec ce = c;
    ce.eps = e;
    double S = 0.0;
    for (const auto& xi : xi_grid) {
      S = std::max(S, std::abs(curve_symbol(ce, xi).value));
    }
    rows.push_back({e, component_integral(ce, j), S});
  }
  return rows;
}

CounterexampleParams::CounterexampleParams(long long J_, special::HalfPlanePoint z_)
    : J(J_), z(z_) {
  if (J < 1) {
    throw DomainError("counterexample: J must be >= 1");
  }
}

CounterexampleNorms counterexample_norms(const CounterexampleParams& p) {
  const double alpha = p.z.alpha();
  const double gabs = std::exp(special::log_gamma(complex(1.0 + alpha, p.z.t())).real());
  double l1 = 0.0;
  for (long long j = p.J; j >= 1; --j) {
    l1 += std::pow(static_cast<double>(j), alpha - 2.0);
  }
  double l2 = 0.0;
  const long long cap = std::min<long long>(p.J, 4000);
  for (long long j = cap; j >= 1; --j) {
    l2 += std::pow(static_cast<double>(j), alpha - 2.0) *
          std::exp2(-0.5 * static_cast<double>(j + 1));
  }
  return {l1 * std::log(2.0) / gabs, l2 / gabs};
}

std::vector<UnboundednessRow> counterexample_unboundedness(const std::vector<double>& R_list) {
  std::vector<UnboundednessRow> rows;
  auto inv = [](double x) { return 1.0 / x; };
  for (double R : R_list) {
    if (!(R >= 1.0) || !std::isfinite(R)) {
      throw DomainError("counterexample_unboundedness: R must be finite and >= 1");
    }
    double total = 0.0;
    for (double a = 1.0; a < R; a *= 2.0) {
      total += detail::gauss_kronrod_integrate(inv, a, std::min(2.0 * a, R), 1e-15).value.real();
    }
    rows.push_back({R, total});
  }
  return rows;
}

std::vector<double> operator_grid(std::size_t N) {
  std::vector<double> x(N);
  for (std::size_t i = 0; i < N; ++i) {
    x[i] = -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(N);
  }
  return x;
}

Matrix oscillatory_operator(const Kernel2& K, const Kernel2& Q, double t, std::size_t N) {
  return assemble(N, [&](double x, double y) {
    const double ph = t * Q(x, y);
    return K(x, y) * complex(std::cos(ph), std::sin(ph));
  });
}

Matrix moment_operator(const Kernel2& K, const Kernel2& Q, int n, std::size_t N) {
  if (n < 0) {
    throw DomainError("moment_operator: n must be >= 0");
  }
  return assemble(N, [&](double x, double y) { return complex(K(x, y) * std::pow(Q(x, y), n)); });
}

Matrix afo_operator(const Kernel2& K, const Kernel2& Q, complex z, std::size_t N,
                    const std::function<complex(complex, double)>& A) {
  auto a = A ? A : [&Q](complex zz, double x) { return std::exp(zz * Q(x, x)); };
  return assemble(N, [&](double x, double y) { return K(x, y) * (std::exp(z * Q(x, y)) - a(z, x)); });
}

double spectral_norm(const Matrix& A, double rel_tol, int max_iter) {
  const auto n = A.cols();
  if (n == 0 || A.norm() == 0.0) {
    return 0.0;
  }
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = complex(1.0 + 0.5 * std::sin(1.2345 * static_cast<double>(i)),
                   0.25 * std::cos(0.789 * static_cast<double>(i)));
  }
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXcd u = A * v;
    const double next = u.norm();
    Eigen::VectorXcd w = A.adjoint() * u;
    const double wn = w.norm();
    if (!(wn > 0.0)) {
      return next;
    }
    v = w / wn;
    if (std::abs(next - sigma) <= rel_tol * next) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  return (A * v).norm();
}

MomentGrowth moment_growth(const Kernel2& K, const Kernel2& Q, int n_max, std::size_t N) {
  if (n_max < 1) {
    throw DomainError("moment_growth: n_max must be >= 1");
  }
  MomentGrowth g{{}, 0.0, 0.0};
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double norm = spectral_norm(moment_operator(K, Q, n, N));
    g.norms.push_back(norm);
    g.base_sup = std::max(g.base_sup, std::pow(norm, 1.0 / n));
    const double y = std::log(norm);
    sx += n;
    sy += y;
    sxx += static_cast<double>(n) * n;
    sxy += n * y;
  }
  const double m = n_max;
  const double denom = m * sxx - sx * sx;
  g.base_fit = denom > 0.0 ? std::exp((m * sxy - sx * sy) / denom) : g.base_sup;
  return g;
}

TaylorCheck taylor_consistency(const Kernel2& K, const Kernel2& Q, double t, int order,
                               std::size_t N) {
  if (order < 0) {
    throw DomainError("taylor_consistency: order must be >= 0");
  }
  Matrix diff = oscillatory_operator(K, Q, t, N);
  complex coeff = 1.0;
  for (int n = 0; n <= order; ++n) {
    diff -= coeff * moment_operator(K, Q, n, N);
    coeff *= complex(0.0, t) / static_cast<double>(n + 1);
  }
  const auto x = operator_grid(N);
  double q = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j) {
        q = std::max(q, std::abs(Q(x[i], x[j])));
      }
    }
  }
  const double tq = std::abs(t) * q;
  const double remainder = std::exp(tq) * std::pow(tq, order + 1) / factorial(order + 1);
  const Matrix absK = assemble(N, [&](double a, double b) { return complex(std::abs(K(a, b))); });
  const double roundoff =
      4.0 * (order + 2) * std::numeric_limits<double>::epsilon() * std::exp(tq);
  return {spectral_norm(diff), remainder, spectral_norm(absK), roundoff};
}

PhaseRemoval phase_removal_check(const Kernel2& K, const Kernel2& Q, int n_max, std::size_t N) {
  if (n_max < 1) {
    throw DomainError("phase_removal_check: n_max must be >= 1");
  }
  PhaseRemoval out{0.0, 0.0, {}};
  for (int k = -n_max; k <= n_max; ++k) {
    out.A = std::max(out.A, spectral_norm(oscillatory_operator(K, Q, k, N)));
  }
  out.D = (out.A * out.A + 1.0) / out.A;
  auto cosQ = [&Q](double x, double y) { return std::cos(Q(x, y)); };
  for (int n = 1; n <= n_max; ++n) {
    out.rows.push_back({n, spectral_norm(moment_operator(K, cosQ, n, N)), std::pow(out.D, n)});
  }
  return out;
}

}  // namespace multlab::curves
