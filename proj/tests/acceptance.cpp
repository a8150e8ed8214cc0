// One PASS/FAIL line per acceptance criterion. Oracles are computed here,
// independently of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

#include "cli.hpp"
#include "multlab/curves_oscillatory.hpp"
#include "multlab/grid_spaces.hpp"
#include "multlab/growth_lab.hpp"
#include "multlab/interpolation_norms.hpp"
#include "multlab/special_functions.hpp"
#include "multlab/spherical_rough.hpp"

using namespace multlab;
using complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <class... T>
std::string fmtn(const char* f, T... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

template <class F>
double golden_min(F f, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 300; ++i) {
    if (f1 < f2) {
      b = x2, x2 = x1, f2 = f1, x1 = b - g * (b - a), f1 = f(x1);
    } else {
      a = x1, x1 = x2, f1 = f2, x2 = a + g * (b - a), f2 = f(x2);
    }
  }
  return f(0.5 * (a + b));
}

// ---------------------------------------------------------------------------------------

Outcome psi_suite() {
  double worst_closed = 0.0, worst_lap = 0.0, worst_margin = kInf;
  double blow_lo = kInf, blow_hi = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double s = 0.1 * i;
    const special::MajorantParameter sp(s);
    worst_closed = std::max(worst_closed,
                            std::abs(special::poisson_majorant(sp, 1.0, 0.0) - 1.0 / std::cos(kPi * s / 2.0)));
    const double h = 1e-3;
    for (double x : {0.5, 1.0, 2.0}) {
      for (double y : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
        auto f = [&](double a, double b) { return special::poisson_majorant(sp, a, b); };
        const double lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
        worst_lap = std::max(worst_lap, std::abs(lap));
      }
    }
  }
  std::mt19937_64 rng(20260615);
  std::uniform_real_distribution<double> us(0.05, 0.95), ux(1e-3, 5.0), uy(-20.0, 20.0);
  for (int k = 0; k < 1000; ++k) {
    const double s = us(rng), x = ux(rng), y = uy(rng);
    worst_margin = std::min(worst_margin, special::poisson_majorant(special::MajorantParameter(s), x, y) -
                                              std::pow(std::abs(y), s));
  }
  for (double s : {0.9, 0.95, 0.99}) {
    const double v = (1.0 - s) * special::poisson_majorant(special::MajorantParameter(s), 1.0, 0.0);
    blow_lo = std::min(blow_lo, v);
    blow_hi = std::max(blow_hi, v);
  }
  const bool ok = worst_closed <= 1e-6 && worst_lap <= 1e-4 && worst_margin >= 0.0 && blow_lo >= 0.5 &&
                  blow_hi <= 1.0;
  return {ok, fmtn("max|psi(1,0)-1/cos| = %.2e, max|lap| = %.2e, min(psi-|y|^s) over 1000 = %.3e, "
                   "(1-s)psi in [%.4f, %.4f]",
                   worst_closed, worst_lap, worst_margin, blow_lo, blow_hi)};
}

Outcome extremal_problem() {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double M = std::pow(10.0, -4.0 + 8.0 * i / 99.0);
    auto obj = [M](double a) { return std::abs(1.0 + a) + std::sqrt((1.0 + a) * (1.0 + a) + M * a * a); };
    const double oracle = golden_min(obj, -3.0, 1.0);
    worst = std::max(worst, std::abs(oracle - special::extremal_infimum(M).value) / (1.0 + oracle));
  }
  // both branches meet at M = 1 with value 1
  const double at1 = special::extremal_infimum(1.0).value;
  const double below = special::extremal_infimum(std::nextafter(1.0, 0.0)).value;
  const double above = special::extremal_infimum(std::nextafter(1.0, 2.0)).value;
  const bool cont = at1 == 1.0 && std::abs(below - 1.0) <= 1e-15 && std::abs(above - 1.0) <= 1e-15;
  return {worst <= 1e-8 && cont,
          fmtn("max rel gap to golden-section over 100 log-M points = %.2e; value at M=1: %.17g, "
               "one ulp either side: %.17g, %.17g",
               worst, at1, below, above)};
}

double pair_by_bisection(double u, double v) {
  if (u == 0.0 && v == 0.0) {
    return 0.0;
  }
  double lo = 0.0, hi = 1.0 + std::abs(u) + std::abs(v);
  for (int i = 0; i < 200; ++i) {
    const double mu = 0.5 * (lo + hi);
    ((u / mu) * (u / mu) + std::abs(v) / mu <= 1.0 ? hi : lo) = mu;
  }
  return hi;
}

Outcome interpolation_norms() {
  using K = interp::SchechterKind;
  double worst = 0.0;
  bool chain = true;
  double lim_dev_mid = 0.0, lim_dev_full = 0.0, extrap_dev = 0.0;
  for (int a = 0; a < 10; ++a) {
    const double lambda = std::pow(10.0, -3.0 + 6.0 * a / 9.0);
    for (int b = 0; b < 10; ++b) {
      const double theta = 0.05 + 0.9 * b / 9.0;
      const double d = 2.0 * std::sin(kPi * theta) / kPi;
      const double L = std::log(lambda);
      const double lead = std::pow(lambda, theta);
      const double span = L == 0.0 ? 1.0 : 2.0 / (std::abs(L) * d);
      const double h = d * lead * golden_min([&](double u) { return pair_by_bisection(u, 1.0 + L * d * u); }, -span, span);
      const double h2 = d * lead * golden_min([&](double u) { return std::hypot(u, 1.0 + L * d * u); }, -span, span);
      const double H = lead * pair_by_bisection(1.0, L * d);
      const double H2 = lead * std::hypot(1.0, L * d);
      const interp::CoupleParams cp(theta, lambda);
      const double ch = interp::schechter_norm(cp, K::lower_h), cH = interp::schechter_norm(cp, K::upper_H);
      for (auto [x, y] : {std::pair{h, ch}, {H, cH}, {h2, interp::schechter_norm(cp, K::lower_h2)},
                          {H2, interp::schechter_norm(cp, K::upper_H2)}}) {
        worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(x)));
      }
      chain = chain && lead <= cH * (1.0 + 1e-14) && ch <= 2.0 * theta * lead * (1.0 + 1e-14);
    }
    const interp::CoupleParams small(1e-4, lambda);
    const double dev = std::max({std::abs(interp::schechter_norm(small, K::lower_h) / 1e-4 - 2.0),
                                 std::abs(interp::schechter_norm(small, K::upper_H) - 1.0),
                                 std::abs(interp::schechter_norm(small, K::lower_h2) / 1e-4 - 2.0),
                                 std::abs(interp::schechter_norm(small, K::upper_H2) - 1.0)});
    lim_dev_full = std::max(lim_dev_full, dev);
    if (lambda >= 1e-2 && lambda <= 1e2) {
      lim_dev_mid = std::max(lim_dev_mid, dev);
    }
    const auto e = interp::endpoint_limits(lambda);
    extrap_dev = std::max({extrap_dev, std::abs(e.h_over_theta - 2.0), std::abs(e.H - 1.0),
                           std::abs(e.h2_over_theta - 2.0), std::abs(e.H2 - 1.0)});
  }
  const bool ok = worst <= 1e-6 && chain && lim_dev_mid <= 1e-3 && extrap_dev <= 1e-3;
  return {ok, fmtn("max rel gap to variational oracles on 10x10 = %.2e; embeddings %s; endpoint "
                   "deviation at theta=1e-4: %.2e for lambda in [1e-2,1e2] (%.2e over [1e-3,1e3], "
                   "which is 2 theta |log lambda| to first order); extrapolated limits %.2e",
                   worst, chain ? "hold" : "FAIL", lim_dev_mid, lim_dev_full, extrap_dev)};
}

Eigen::MatrixXcd dense_multiplier(const std::vector<complex>& m) {
  const std::size_t n = m.size();
  std::vector<complex> kernel(n);
  for (std::size_t d = 0; d < n; ++d) {
    complex s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      s += m[k] * std::polar(1.0, 2.0 * kPi * static_cast<double>(k * d % n) / static_cast<double>(n));
    }
    kernel[d] = s / static_cast<double>(n);
  }
  Eigen::MatrixXcd T(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      T(x, y) = kernel[(x + n - y) % n];
    }
  }
  return T;
}

Outcome plancherel_and_soundness() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst_plan = 0.0, worst_dense = 0.0;
  int witnesses = 0, witness_fail = 0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<complex> m(128);
    double mx = 0.0;
    for (auto& z : m) {
      z = std::polar(3.0 * uni(rng), 2.0 * kPi * uni(rng));
      mx = std::max(mx, std::abs(z));
    }
    const auto sym = grid::Symbol::from_samples(m);
    const auto est = grid::multiplier_norm(sym, 2.0);
    worst_plan = std::max(worst_plan, std::abs(est.value - mx));
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
      grid::NormBudget b;
      b.seed = static_cast<std::uint64_t>(trial);
      const auto e = grid::multiplier_norm(sym, p, grid::Weight::unit(), b);
      ++witnesses;
      witness_fail += grid::verify_witness(sym, p, grid::Weight::unit(), e) ? 0 : 1;
    }
  }
  const std::size_t n = 256;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<complex> m(n);
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double xi = static_cast<double>(grid::fft_frequency(k, n));
      m[k] = std::polar(1.0 / (1.0 + 0.05 * std::abs(xi)), 0.3 * xi + trial);
      w[k] = std::pow(0.2 + std::abs(std::sin(kPi * k / n)), 0.5 + 0.3 * trial) * (0.5 + uni(rng));
    }
    const auto sym = grid::Symbol::from_samples(m);
    const grid::Weight wt({n}, w);
    for (double p : {1.0, 2.0, 3.0}) {
      const auto e = grid::multiplier_norm(sym, p, wt);
      ++witnesses;
      witness_fail += grid::verify_witness(sym, p, wt, e) ? 0 : 1;
      if (p == 2.0) {
        const auto T = dense_multiplier(m);
        Eigen::VectorXd sw(n), isw(n);
        for (std::size_t i = 0; i < n; ++i) {
          sw[i] = std::sqrt(w[i]);
          isw[i] = 1.0 / sw[i];
        }
        const Eigen::MatrixXcd A = sw.asDiagonal() * T * isw.asDiagonal();
        const double sigma = Eigen::JacobiSVD<Eigen::MatrixXcd>(A).singularValues()(0);
        worst_dense = std::max(worst_dense, std::abs(e.value - sigma) / sigma);
      }
    }
  }
  const bool ok = worst_plan <= 1e-10 && worst_dense <= 1e-6 && witness_fail == 0;
  return {ok, fmtn("max |p=2 norm - max|m|| = %.2e; weighted p=2 vs dense SVD (256 pts, 3 trials) "
                   "rel %.2e; witness checks %d/%d",
                   worst_plan, worst_dense, witnesses - witness_fail, witnesses)};
}

Outcome counterexample_anchors() {
  const double target = kPi * kPi * std::log(2.0) / 6.0;
  const double l0 = curves::counterexample_norms(curves::CounterexampleParams(1000000, special::HalfPlanePoint(0.0, 0.0))).l1_exact;
  double lo = kInf, hi = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double t = 0.1 * i;
    const double v = curves::counterexample_norms(curves::CounterexampleParams(1000000, special::HalfPlanePoint(0.0, t))).l1_exact;
    const double r = v / std::exp(0.5 * kPi * t);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const auto rows = curves::counterexample_unboundedness({1.0, std::exp(1.0), 1e3});
  const double e0 = std::abs(rows[0].l1), e1 = std::abs(rows[1].l1 - 1.0),
               e2 = std::abs(rows[2].l1 - 3.0 * std::log(10.0));
  // fixed bracket: the ratio falls from zeta(2) log 2 at t = 0 to about zeta(2) log 2 / sqrt(2 pi t)
  const bool ok = std::abs(l0 - target) <= 1e-6 && lo >= 0.1 && hi <= 1.2 && e0 == 0.0 && e1 <= 1e-14 &&
                  e2 <= 1e-13;
  return {ok, fmtn("|l1(t=0,J=1e6) - pi^2 log2/6| = %.2e; ratio to e^{pi t/2} over t in [0,10] in "
                   "[%.4f, %.4f] within [0.1, 1.2]; log R errors %.1e, %.1e, %.1e",
                   std::abs(l0 - target), lo, hi, e0, e1, e2)};
}

double gamma_oracle_2d(int j) {
  constexpr int kAngles = 1024;
  constexpr double R0 = 400.0;
  auto angular = [&](double r) {
    complex s = 0.0;
    for (int a = 0; a < kAngles; ++a) {
      const double phi = 2.0 * kPi * a / kAngles;
      s += std::polar(1.0, j * phi - r * std::cos(phi));
    }
    return s * (2.0 * kPi / kAngles);
  };
  complex acc = 0.0;
  for (double a = 0.0; a < R0; a += 0.5) {
    acc += boost::math::quadrature::gauss<double, 15>::integrate(
        [&](double r) {
          const double taper = r < R0 - 2.0 * kPi ? 1.0 : (R0 - r) / (2.0 * kPi);
          return angular(r) * taper / r;
        },
        a, a + 0.5);
  }
  return (acc / std::pow(complex(0.0, -1.0), j)).real();
}

Outcome gamma_coefficients() {
  double symbolic = 0.0, oracle = 0.0;
  for (int j = 1; j <= 200; ++j) {
    symbolic = std::max(symbolic, std::abs(sphere::gamma_coefficient(j, 2) - 2.0 * kPi / j) / (2.0 * kPi / j));
  }
  for (int j = 1; j <= 20; ++j) {
    const double g = sphere::gamma_coefficient(j, 2);
    oracle = std::max(oracle, std::abs(gamma_oracle_2d(j) - g) / g);
  }
  std::string brackets;
  bool bounded = true;
  for (int n : {2, 4}) {
    double lo = kInf, hi = 0.0;
    for (int j = 1; j <= 200; ++j) {
      const double r = sphere::gamma_coefficient(j, n) * std::pow(j, n / 2.0);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    bounded = bounded && lo > 0.0 && hi / lo <= 16.0;
    brackets += fmtn(" n=%d: [%.5f, %.5f]", n, lo, hi);
  }
  const bool ok = symbolic <= 4e-16 && oracle <= 0.01 && bounded;
  return {ok, fmtn("max rel |gamma_j - 2pi/j| = %.1e; max rel gap to oscillatory quadrature j<=20 = "
                   "%.2e; gamma_j j^{n/2} for j<=200:",
                   symbolic, oracle) + brackets};
}

Outcome sphere_growth() {
  const std::vector<std::vector<complex>> ms{
      {0.0, 0.6, 0.0, 0.8}, {0.0, 1.0, 0.5, 0.0, 0.25}, {0.0, 0.3, -0.2, 0.5, 0.1, 0.4}};
  std::vector<double> t_grid;
  for (int t = 1; t <= 20; ++t) {
    t_grid.push_back(t);
  }
  const sphere::SphereGrowthOptions opt;
  double worst_leib = 0.0, worst_exp = 0.0;
  std::string exps;
  for (const auto& c : ms) {
    const auto m = sphere::normalized(sphere::ZonalExpansion(4, c));
    for (double t : {0.5, 1.0, 5.0, 10.0, 20.0}) {
      worst_leib = std::max(worst_leib, sphere::leibniz_residual(m, t, opt));
    }
    const double e = sphere::unimodular_sphere_growth(m, t_grid, opt).exponent;
    worst_exp = std::max(worst_exp, e);
    exps += fmt(" %.4f", e);
  }
  return {worst_leib <= 1e-6 && worst_exp <= 2.2,
          fmt("max Leibniz residual (t in {0.5,1,5,10,20}) = %.2e; fitted exponents over t=1..20:",
              worst_leib) + exps + " (limit 2.2)"};
}

Outcome growth_fit() {
  std::vector<double> t, N;
  for (int i = 0; i < 20; ++i) {
    t.push_back(1.0 + 19.0 * i / 19.0);
    N.push_back(2.0 * std::exp(0.5 * std::pow(t.back(), 0.7)));
  }
  const auto f = growth::fit_exponential_power(t, N, growth::FitMode::envelope);
  const double ds = std::abs(f.s - 0.7), dc = std::abs(f.c - 0.5) / 0.5;
  return {ds <= 0.02 && dc <= 0.05,
          fmtn("envelope fit (A, c, s) = (%.6f, %.6f, %.4f); |ds| = %.2e, |dc|/c = %.2e", f.A, f.c, f.s, ds, dc)};
}

Outcome converse_bound() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  int checks = 0, fails = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<complex> m(32);
    for (auto& v : m) {
      v = uni(rng);
    }
    const auto sym = grid::Symbol::from_samples(m);
    const auto n1 = grid::multiplier_norm(sym, 1.0);
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
      const auto nt = grid::multiplier_norm(growth::unimodular_symbol(sym, t), 1.0);
      const double ratio = nt.value / std::exp(t * n1.value);
      ++checks;
      fails += (ratio <= 1.0 + 1e-12 && nt.kind == grid::EstimateKind::exact) ? 0 : 1;
      worst = std::max(worst, ratio);
    }
  }
  return {fails == 0, fmtn("%d/%d exact p=1 checks hold; max ||e^{itm}||_1 / e^{|t| N1(m)} = %.4f",
                           checks - fails, checks, worst)};
}

Outcome cosine_and_moments() {
  double worst_cos = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const auto terms = growth::cosine_power_expand(k);
    for (int i = 0; i <= 1000; ++i) {
      const double x = -kPi + 2.0 * kPi * i / 1000.0;
      worst_cos = std::max(worst_cos, std::abs(growth::evaluate_cosine_expansion(terms, x) - std::pow(std::cos(x), k)));
    }
  }
  auto K = [](double x, double y) { return 1.0 / (x - y); };
  auto Q = [](double x, double y) { return std::sin(x - y); };
  bool all = true, literal = true;
  double worst_ratio = 0.0;
  for (double t : {-1.0, -0.5, 0.25, 0.5, 1.0}) {
    const auto c = curves::taylor_consistency(K, Q, t, 12, 512);
    all = all && c.holds();
    literal = literal && c.difference <= c.remainder;
    worst_ratio = std::max(worst_ratio, c.difference / ((c.remainder + c.roundoff) * c.abs_kernel));
  }
  return {worst_cos <= 1e-12 && all,
          fmtn("max |(cos x)^k - expansion| (k<=12) = %.2e; Taylor N=12 on 512 grid, t in "
               "{-1,-0.5,0.25,0.5,1}: max difference / ((remainder + roundoff) ||h|K||) = %.3f; "
               "bare remainder alone %s",
               worst_cos, worst_ratio, literal ? "also holds" : "does not hold")};
}

double sgn(double u) { return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0); }

Outcome divergence_witness() {
  const curves::CurveSpec model{{[](double u) { return sgn(u) * std::min(std::abs(u), 1.0); }},
                                [](double u) { return 1.0 / u; },
                                0.5,
                                {1.0}};
  const std::vector<double> eps{0.5, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  double worst = 0.0, gap = 0.0;
  for (const auto& r : curves::divergence_witness(model, 0, eps, {{0.5}, {1.0}, {4.0}})) {
    const double exact = 2.0 * (1.0 - r.eps + std::log(1.0 / r.eps));
    worst = std::max(worst, std::abs(r.I - exact));
    gap = std::max(gap, std::abs(r.I - 2.0 * (1.0 + std::log(1.0 / r.eps))) - 2.0 * r.eps);
  }
  double parity = 0.0;
  const curves::CurveSpec odd_even{{[](double u) { return u / (1.0 + u * u); }},
                                   [](double u) { return 1.0 / (1.0 + u * u); },
                                   1e-3,
                                   {}};
  for (double e : {1e-1, 1e-3, 1e-5}) {
    auto c = odd_even;
    c.eps = e;
    parity = std::max(parity, std::abs(curves::component_integral(c, 0)));
  }
  const curves::CurveSpec line{{[](double u) { return u; }}, [](double u) { return 1.0 / u; }, 1e-3, {}};
  parity = std::max(parity, std::abs(curves::curve_symbol(line, {0.0}).value));
  const curves::CurveSpec parabola{{[](double u) { return u; }, [](double u) { return u * u; }},
                                   [](double u) { return 1.0 / u; },
                                   1e-3,
                                   {}};
  for (double x2 : {0.5, 2.0}) {
    parity = std::max(parity, std::abs(curves::curve_symbol(parabola, {0.0, x2}).value));
  }
  // The stated form 2(1 + log 1/eps) omits -2 eps; the gap to it is printed.
  return {worst <= 1e-6 && parity <= 1e-9,
          fmtn("max |I(eps) - 2(1 - eps + log 1/eps)| over eps in [1e-6, 0.5] = %.2e; the gap to "
               "2(1 + log 1/eps) is exactly 2 eps (residual %.1e), reaching 1 at eps = 0.5; parity "
               "cases max %.1e",
               worst, gap, parity)};
}

Outcome determinism() {
  int total = 0, same = 0;
  for (const auto& info : cli::registry()) {
    cli::ExperimentConfig cfg;
    cfg.experiment = info.name;
    cfg.seed = 20260615;
    const auto a = cli::run(cfg);
    const auto b = cli::run(cfg);
    for (auto f : {cli::Format::csv, cli::Format::json}) {
      const auto ra = cli::render(a, f), rb = cli::render(b, f);
      ++total;
      bool eq = ra.size() == rb.size();
      for (std::size_t i = 0; eq && i < ra.size(); ++i) {
        eq = ra[i].filename == rb[i].filename && ra[i].content == rb[i].content;
      }
      same += eq ? 1 : 0;
    }
  }
  return {same == total, fmtn("%d/%d experiment x format renderings byte-identical across reruns", same, total)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"psi-majorant suite", psi_suite},
      {"extremal problem", extremal_problem},
      {"interpolation norms", interpolation_norms},
      {"discrete Plancherel and norm soundness", plancherel_and_soundness},
      {"counterexample anchors", counterexample_anchors},
      {"gamma coefficients", gamma_coefficients},
      {"sphere growth", sphere_growth},
      {"growth-fit recovery", growth_fit},
      {"converse bound on exact paths", converse_bound},
      {"cosine identity and moment consistency", cosine_and_moments},
      {"divergence witness", divergence_witness},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
