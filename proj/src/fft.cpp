#include "multlab/detail/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <stdexcept>
#include <utility>

namespace multlab::detail {

namespace {

struct PlanKey {
  std::vector<std::size_t> dims;
  int kind;  // FFTW_FORWARD, FFTW_BACKWARD, or 2 for DST-I
  bool operator<(const PlanKey& o) const {
    return std::tie(kind, dims) < std::tie(o.kind, o.dims);
  }
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) {
      fftw_destroy_plan(plan);
    }
  }

  fftw_plan complex_plan(const std::vector<std::size_t>& dims, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    PlanKey key{dims, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) {
      return it->second;
    }
    std::size_t total = 1;
    std::vector<int> n;
    for (auto d : dims) {
      total *= d;
      n.push_back(static_cast<int>(d));
    }
    auto* scratch = fftw_alloc_complex(total);
    fftw_plan plan = fftw_plan_dft(static_cast<int>(n.size()), n.data(), scratch, scratch, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (plan == nullptr) {
      throw std::runtime_error("fftw: could not create complex plan");
    }
    plans_.emplace(std::move(key), plan);
    return plan;
  }

  fftw_plan dst1_plan(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    PlanKey key{{n}, 2};
    auto it = plans_.find(key);
    if (it != plans_.end()) {
      return it->second;
    }
    auto* scratch = fftw_alloc_real(n);
    fftw_plan plan = fftw_plan_r2r_1d(static_cast<int>(n), scratch, scratch, FFTW_RODFT00,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (plan == nullptr) {
      throw std::runtime_error("fftw: could not create DST-I plan");
    }
    plans_.emplace(std::move(key), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& dims,
                 FftDirection dir) {
  if (data.empty()) {
    return;
  }
  const int sign = dir == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan = cache().complex_plan(dims, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

void dst1_inplace(std::vector<double>& data) {
  if (data.empty()) {
    return;
  }
  fftw_plan plan = cache().dst1_plan(data.size());
  fftw_execute_r2r(plan, data.data(), data.data());
}

}  // namespace multlab::detail
