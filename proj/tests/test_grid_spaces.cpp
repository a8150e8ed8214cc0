#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "multlab/grid_spaces.hpp"

using namespace multlab;
using namespace multlab::grid;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<complex> random_complex(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<complex> out(n);
  for (auto& z : out) {
    z = {g(rng), g(rng)};
  }
  return out;
}

// Dense circulant matrix of T_m on a 1-d grid from a naive DFT of m,
// independent of FFTW.
Eigen::MatrixXcd dense_multiplier(const std::vector<complex>& m) {
  const std::size_t n = m.size();
  std::vector<complex> kernel(n);
  for (std::size_t d = 0; d < n; ++d) {
    complex s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      s += m[k] * std::polar(1.0, 2.0 * kPi * static_cast<double>(k * d % n) / n);
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

double brute_force_ap(const std::vector<double>& w, double p) {
  const double q = 1.0 / (p - 1.0);
  double best = 0.0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t b = a; b < w.size(); ++b) {
      s1 += w[b];
      s2 += std::pow(w[b], -q);
      const double len = static_cast<double>(b - a + 1);
      best = std::max(best, (s1 / len) * std::pow(s2 / len, p - 1.0));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("lp_norm examples") {
  GridFunction delta({4, 4}, {0.5, 0.25}, std::vector<complex>(16, 0.0));
  std::vector<complex> s(16, 0.0);
  s[5] = 1.0;
  delta = delta.with_samples(s);
  CHECK(lp_norm(delta, 1.0) == Approx(0.125).epsilon(1e-15));
  CHECK(lp_norm(GridFunction::from_samples(std::vector<complex>(8, 1.0)), 2.0) ==
        Approx(std::sqrt(8.0)).epsilon(1e-15));
  GridFunction two({2}, {1.0}, {3.0, 4.0});
  CHECK(lp_norm(two, 2.0, Weight({2}, {1.0, 1.0})) == Approx(5.0).epsilon(1e-15));
  CHECK(lp_norm(two, INFINITY) == 4.0);
  CHECK(lp_norm(two, INFINITY, Weight({2}, {7.0, 0.5})) == 4.0);
}

TEST_CASE("grid invariants are enforced") {
  CHECK_THROWS_AS(GridFunction({3}, {1.0}, std::vector<complex>(3, 0.0)), DomainError);
  CHECK_THROWS_AS(GridFunction({4}, {1.0}, std::vector<complex>(3, 0.0)), DimensionMismatch);
  CHECK_THROWS_AS(GridFunction({2}, {1.0}, {1.0, complex(NAN, 0.0)}), DomainError);
  CHECK_THROWS_AS(Weight({2}, {1.0, 0.0}), DomainError);
  const auto f = GridFunction::from_samples(std::vector<complex>(8, 1.0));
  CHECK_THROWS_AS(apply_multiplier(Symbol::from_samples(std::vector<complex>(4, 1.0)), f),
                  DimensionMismatch);
}

TEST_CASE("apply_multiplier identity, scalar and shift") {
  std::mt19937_64 rng(1);
  const auto f = GridFunction::from_samples(random_complex(64, rng));
  const auto id = apply_multiplier(Symbol::from_samples(std::vector<complex>(64, 1.0)), f);
  const auto sc = apply_multiplier(Symbol::from_samples(std::vector<complex>(64, complex(2.0, -1.0))), f);
  std::vector<complex> shift(64);
  const int xi0 = 5;
  for (std::size_t k = 0; k < 64; ++k) {
    shift[k] = std::polar(1.0, -2.0 * kPi * xi0 * static_cast<double>(k) / 64.0);
  }
  const auto sh = apply_multiplier(Symbol::from_samples(shift), f);
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(std::abs(id.samples()[i] - f.samples()[i]) < 1e-12);
    CHECK(std::abs(sc.samples()[i] - complex(2.0, -1.0) * f.samples()[i]) < 1e-12);
    CHECK(std::abs(sh.samples()[i] - f.samples()[(i + 64 - xi0) % 64]) < 1e-12);
  }
}

TEST_CASE("multidimensional multiplier agrees with separable application") {
  std::mt19937_64 rng(2);
  const std::vector<std::size_t> dims = {8, 16};
  const GridFunction f(dims, {1.0, 1.0}, random_complex(128, rng));
  std::vector<complex> m(128);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 16; ++b) {
      m[a * 16 + b] = std::polar(1.0, -2.0 * kPi * (3.0 * a / 8.0 + 2.0 * b / 16.0));
    }
  }
  const auto g = apply_multiplier(Symbol(dims, m), f);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 16; ++b) {
      const complex expect = f.samples()[((a + 5) % 8) * 16 + (b + 14) % 16];
      CHECK(std::abs(g.samples()[a * 16 + b] - expect) < 1e-12);
    }
  }
}

TEST_CASE("Plancherel") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = GridFunction::from_samples(random_complex(128, rng));
    const auto m = Symbol::from_samples(random_complex(128, rng));
    const auto fh = unitary_dft(f);
    double acc = 0.0;
    for (std::size_t k = 0; k < 128; ++k) {
      acc += std::norm(m.samples()[k] * fh[k]);
    }
    CHECK(lp_norm(apply_multiplier(m, f), 2.0) == Approx(std::sqrt(acc)).epsilon(1e-10));
  }
}

TEST_CASE("exact p = 2 and unimodular norms") {
  std::vector<complex> m(64, 0.5);
  m[9] = complex(0.0, -3.0);
  const auto est = multiplier_norm(Symbol::from_samples(m), 2.0);
  CHECK(est.kind == EstimateKind::exact);
  CHECK(std::abs(est.value - 3.0) <= 1e-10);
  CHECK(verify_witness(Symbol::from_samples(m), 2.0, Weight::unit(), est));

  std::mt19937_64 rng(4);
  std::vector<complex> u(64);
  for (auto& z : u) {
    z = std::polar(1.0, std::uniform_real_distribution<double>(0.0, 6.0)(rng));
  }
  CHECK(multiplier_norm(Symbol::from_samples(u), 2.0).value == 1.0);
}

TEST_CASE("p = 1 with a nonnegative kernel is its sum") {
  const std::size_t n = 32;
  std::vector<double> k(n);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double total = 0.0;
  for (auto& v : k) {
    v = uni(rng);
    total += v;
  }
  // m = DFT of k, so that T_m f = k * f
  std::vector<complex> m(n);
  for (std::size_t j = 0; j < n; ++j) {
    complex s = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      s += k[x] * std::polar(1.0, -2.0 * kPi * static_cast<double>(j * x % n) / n);
    }
    m[j] = s;
  }
  const auto sym = Symbol::from_samples(m);
  for (double p : {1.0, std::numeric_limits<double>::infinity()}) {
    const auto est = multiplier_norm(sym, p);
    CHECK(est.kind == EstimateKind::exact);
    CHECK(est.value == Approx(total).epsilon(1e-12));
    CHECK(verify_witness(sym, p, Weight::unit(), est));
  }
}

TEST_CASE("weighted p = 2 power iteration agrees with the dense singular value on 256 points") {
  const std::size_t n = 256;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<complex> m(n);
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double xi = static_cast<double>(fft_frequency(k, n));
      m[k] = std::polar(1.0 / (1.0 + 0.05 * std::abs(xi)), 0.3 * xi + trial);
      w[k] = std::pow(0.2 + std::abs(std::sin(kPi * k / n)), 0.5 + 0.3 * trial) * (0.5 + uni(rng));
    }
    const Symbol sym = Symbol::from_samples(m);
    const Weight wt({n}, w);
    const auto est = multiplier_norm(sym, 2.0, wt);
    CHECK(est.converged);
    CHECK(est.kind == EstimateKind::exact);
    CHECK(verify_witness(sym, 2.0, wt, est));

    const Eigen::MatrixXcd T = dense_multiplier(m);
    Eigen::VectorXd sw(n), isw(n);
    for (std::size_t i = 0; i < n; ++i) {
      sw[i] = std::sqrt(w[i]);
      isw[i] = 1.0 / sw[i];
    }
    const Eigen::MatrixXcd A = sw.asDiagonal() * T * isw.asDiagonal();
    const Eigen::MatrixXcd AtA = A.adjoint() * A;
    const double sigma = std::sqrt(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(AtA).eigenvalues().maxCoeff());
    CHECK(std::abs(est.value - sigma) <= 1e-6 * sigma);
  }
}

TEST_CASE("weighted path with unit weight matches the closed form") {
  std::vector<complex> m(64);
  for (std::size_t k = 0; k < 64; ++k) {
    m[k] = 1.0 + 0.5 * std::cos(2.0 * kPi * k / 64.0);
  }
  const auto sym = Symbol::from_samples(m);
  const auto est = multiplier_norm(sym, 2.0, Weight({64}, std::vector<double>(64, 1.0)));
  CHECK(est.value == Approx(1.5).epsilon(1e-8));
}

TEST_CASE("weighted p = 1 is exact and sound") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.2, 3.0);
  const std::size_t n = 32;
  std::vector<double> w(n);
  for (auto& v : w) {
    v = uni(rng);
  }
  const auto m = Symbol::from_samples(random_complex(n, rng));
  const Weight wt({n}, w);
  const auto est = multiplier_norm(m, 1.0, wt);
  CHECK(est.kind == EstimateKind::exact);
  CHECK(verify_witness(m, 1.0, wt, est));
  // column maxima of the weighted convolution matrix
  const Eigen::MatrixXcd T = dense_multiplier(m.samples());
  double best = 0.0;
  for (std::size_t y = 0; y < n; ++y) {
    double col = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      col += std::abs(T(x, y)) * w[x];
    }
    best = std::max(best, col / w[y]);
  }
  CHECK(est.value == Approx(best).epsilon(1e-12));
}

TEST_CASE("general p lower bounds are sound and monotone in budget") {
  std::mt19937_64 rng(8);
  const auto m = Symbol::from_samples(random_complex(64, rng));
  for (double p : {1.5, 3.0}) {
    NormBudget small;
    small.probes = 4;
    small.seed = 11;
    NormBudget large = small;
    large.probes = 12;
    const auto a = multiplier_norm(m, p, Weight::unit(), small);
    const auto b = multiplier_norm(m, p, Weight::unit(), large);
    CHECK(a.kind == EstimateKind::lower_bound);
    CHECK(verify_witness(m, p, Weight::unit(), a));
    CHECK(verify_witness(m, p, Weight::unit(), b));
    CHECK(b.value >= a.value);
    // Riesz-Thorin: ||T||_p <= ||T||_1^{|1-2/p|} ||T||_2^{1-|1-2/p|}
    const double n1 = multiplier_norm(m, 1.0).value;
    const double n2 = multiplier_norm(m, 2.0).value;
    const double th = std::abs(1.0 - 2.0 / p);
    CHECK(b.value <= std::pow(n1, th) * std::pow(n2, 1.0 - th) * (1.0 + 1e-9));
  }
}

TEST_CASE("submultiplicativity on exact paths") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_complex(32, rng);
    const auto b = random_complex(32, rng);
    std::vector<complex> ab(32);
    for (std::size_t i = 0; i < 32; ++i) {
      ab[i] = a[i] * b[i];
    }
    for (double p : {1.0, 2.0}) {
      const double na = multiplier_norm(Symbol::from_samples(a), p).value;
      const double nb = multiplier_norm(Symbol::from_samples(b), p).value;
      const double nab = multiplier_norm(Symbol::from_samples(ab), p).value;
      CHECK(nab <= na * nb + 1e-9);
    }
  }
}

TEST_CASE("A_p characteristic") {
  CHECK(ap_characteristic(Weight({64}, std::vector<double>(64, 3.0)), 2.0) == Approx(1.0).epsilon(1e-14));
  for (double K : {2.0, 10.0, 100.0}) {
    std::vector<double> w(128, 1.0);
    std::fill(w.begin() + 64, w.end(), K);
    CHECK(ap_characteristic(Weight({128}, w), 2.0) ==
          Approx((1.0 + K) * (1.0 + K) / (4.0 * K)).epsilon(1e-13));
  }
  // power weights |x|^a on 256 points: dyadic value below brute force over
  // all intervals, increasing in |a|
  double prev = 1.0;
  for (double a : {0.1, 0.3, 0.6, 0.9}) {
    std::vector<double> w(256);
    for (std::size_t i = 0; i < 256; ++i) {
      w[i] = std::pow(std::abs((i + 0.5) / 256.0 - 0.5), a);
    }
    const double dy = ap_characteristic(Weight({256}, w), 2.0);
    CHECK(dy >= prev);
    CHECK(dy <= brute_force_ap(w, 2.0) * (1.0 + 1e-12));
    CHECK(std::isfinite(dy));
    prev = dy;
  }
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> uni(0.1, 5.0);
  std::vector<double> w(64);
  for (auto& v : w) {
    v = uni(rng);
  }
  CHECK(ap_characteristic(Weight({64}, w), 3.0) >= 1.0);
  CHECK(ap_characteristic(Weight({64}, w), 1.0) >= 1.0);
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(12);
  const GridFunction f({4, 8}, {0.1, 0.3}, random_complex(32, rng));
  const auto g = grid_from_json(grid_to_json(f));
  CHECK(g.dims() == f.dims());
  CHECK(g.spacing() == f.spacing());
  CHECK(g.samples() == f.samples());
  const std::string csv = grid_to_csv(f);
  CHECK(csv.rfind("# dims=4x8", 0) == 0);
}
