#pragma once

// Discrete periodic model of L^p(w): grid functions on a uniform torus,
// DFT multiplier operators T_m f = (m * f^)^v, their operator norms and
// dyadic A_p characteristics.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "multlab/errors.hpp"

namespace multlab::grid {

using complex = std::complex<double>;

/// Complex samples on a uniform periodic grid, row-major, every axis a power
/// of two.
class GridFunction {
 public:
  GridFunction(std::vector<std::size_t> dims, std::vector<double> spacing,
               std::vector<complex> samples);

  static GridFunction zeros(std::vector<std::size_t> dims, std::vector<double> spacing);
  /// One-dimensional grid with unit spacing.
  static GridFunction from_samples(std::vector<complex> samples);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<double>& spacing() const noexcept { return spacing_; }
  const std::vector<complex>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double cell_volume() const noexcept;

  GridFunction with_samples(std::vector<complex> samples) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> spacing_;
  std::vector<complex> samples_;
};

/// Multiplier samples on the frequency grid in FFT order (index k stands for
/// frequency k if k < N/2, else k - N).
class Symbol {
 public:
  Symbol(std::vector<std::size_t> dims, std::vector<complex> samples);
  static Symbol from_samples(std::vector<complex> samples);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<complex>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

  bool unimodular() const noexcept;  // all |m| = 1 within 1e-12
  bool real_valued(double tol = 1e-12) const noexcept;
  double sup_modulus() const noexcept;

 private:
  std::vector<std::size_t> dims_;
  std::vector<complex> samples_;
};

/// Strictly positive weight on the spatial grid; the default-constructed
/// weight is the unit weight.
class Weight {
 public:
  Weight() = default;
  Weight(std::vector<std::size_t> dims, std::vector<double> samples);
  static Weight unit() { return {}; }

  bool is_unit() const noexcept { return samples_.empty(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<double>& samples() const noexcept { return samples_; }
  double at(std::size_t i) const noexcept { return is_unit() ? 1.0 : samples_[i]; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> samples_;
};

enum class EstimateKind { exact, lower_bound };

struct NormEstimate {
  double value = 0.0;
  GridFunction witness = GridFunction::from_samples({complex(1.0)});
  EstimateKind kind = EstimateKind::lower_bound;
  bool converged = true;
};

std::string to_string(EstimateKind kind);

struct NormBudget {
  int probes = 24;             // random probes for the general-p lower bound
  int ascent_steps = 200;      // projected gradient steps per probe
  int power_iterations = 4000; // per start vector, weighted p = 2
  int restarts = 8;            // random restarts beyond the all-ones start
  double tolerance = 1e-8;     // relative, weighted p = 2
  std::uint64_t seed = 0;
};

/// (sum |f|^p w * cell volume)^{1/p}; sup norm for p = inf (weight ignored).
double lp_norm(const GridFunction& f, double p, const Weight& w = Weight::unit());

/// Unitary forward/inverse DFT pair around a pointwise product.
GridFunction apply_multiplier(const Symbol& m, const GridFunction& f);

/// Unitary DFT of f (same shape).
std::vector<complex> unitary_dft(const GridFunction& f);

/// Convolution kernel k = inverse DFT of m / N, so T_m f = k * f (circular).
std::vector<complex> convolution_kernel(const Symbol& m);

/// Operator norm of T_m on L^p(w). Exact for (p = 2, unit), (p = 1 or inf,
/// unit), (p = 1, any weight) and, up to the power-iteration tolerance,
/// (p = 2, weighted); a certified lower bound otherwise.
NormEstimate multiplier_norm(const Symbol& m, double p, const Weight& w = Weight::unit(),
                             const NormBudget& budget = {});

/// ||T_m f||_{p,w} / ||f||_{p,w}.
double rayleigh_ratio(const Symbol& m, const GridFunction& f, double p, const Weight& w);

/// Checks the witness of an estimate against its stored value.
bool verify_witness(const Symbol& m, double p, const Weight& w, const NormEstimate& est,
                    double rel_tol = 1e-8);

/// max over dyadic sub-boxes of (avg w)(avg w^{1-p'})^{p-1}; for p = 1 the
/// ratio max (avg w / min w) over the same boxes.
double ap_characteristic(const Weight& w, double p);

/// Frequency of FFT index k on an axis of length n.
inline long long fft_frequency(std::size_t k, std::size_t n) {
  return k < n / 2 ? static_cast<long long>(k)
                   : static_cast<long long>(k) - static_cast<long long>(n);
}

// --- serialization ------------------------------------------------------------

/// {"dims": [...], "spacing": [...], "re": [...], "im": [...]}
std::string grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const std::string& text);

/// Header line "# dims=8x8 spacing=0.1,0.1" then columns index,re,im.
std::string grid_to_csv(const GridFunction& f);

}  // namespace multlab::grid
