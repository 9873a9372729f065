#include "fft_engine.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qqpft::detail {

namespace {
// FFTW's planner is not thread-safe; executing a plan is. Plans are created
// FFTW_UNALIGNED so they can be applied to any buffer of the right shape.
std::mutex g_plan_mutex;
std::map<std::pair<int, int>, fftw_plan>& plan_cache() {
  static std::map<std::pair<int, int>, fftw_plan> cache;
  return cache;
}
}  // namespace

void fft2(std::complex<double>* data, int n, int sign) {
  if (n < 1) throw std::invalid_argument("fft2: bad size");
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = plan_cache().find(key);
    if (it == plan_cache().end()) {
      std::vector<std::complex<double>> tmp(static_cast<std::size_t>(n) * n);
      auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
      plan = fftw_plan_dft_2d(n, n, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
      if (plan == nullptr) throw std::runtime_error("fft2: planning failed");
      plan_cache().emplace(key, plan);
    } else {
      plan = it->second;
    }
  }
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, p, p);
}

bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace qqpft::detail
