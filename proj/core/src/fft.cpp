#include "gsqg/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace gsqg {
namespace {

// Plans are created once per size with FFTW_UNALIGNED so they can be executed
// on std::vector storage through the new-array interface.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  fftw_plan real_forward = nullptr;   // r2c, last index halved
  fftw_plan real_backward = nullptr;  // c2r
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plans] : plans_) {
      fftw_destroy_plan(plans.forward);
      fftw_destroy_plan(plans.backward);
      fftw_destroy_plan(plans.real_forward);
      fftw_destroy_plan(plans.real_backward);
    }
  }

  PlanPair get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> scratch_in(n * n), scratch_out(n * n);
    auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
    const int ni = static_cast<int>(n);
    PlanPair plans;
    plans.forward = fftw_plan_dft_2d(ni, ni, in, out, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.backward = fftw_plan_dft_2d(ni, ni, in, out, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    std::vector<double> real_scratch(n * n);
    std::vector<cplx> half_scratch(n * (n / 2 + 1));
    auto* half = reinterpret_cast<fftw_complex*>(half_scratch.data());
    plans.real_forward =
        fftw_plan_dft_r2c_2d(ni, ni, real_scratch.data(), half, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.real_backward =
        fftw_plan_dft_c2r_2d(ni, ni, half, real_scratch.data(), FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_DESTROY_INPUT);
    if (!plans.forward || !plans.backward || !plans.real_forward || !plans.real_backward) throw std::runtime_error("FFTW plan creation failed");
    plans_.emplace(n, plans);
    return plans;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(fftw_plan plan, std::vector<cplx>& in, std::vector<cplx>& out) {
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

std::vector<cplx> forward_transform(const Grid2D& grid, std::span<const cplx> values) {
  const std::size_t n = grid.n_side();
  if (values.size() != grid.size()) throw std::invalid_argument("forward_transform: size mismatch");
  std::vector<cplx> in(values.begin(), values.end()), out(grid.size());
  execute(cache().get(n).forward, in, out);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<cplx> forward_transform(const Grid2D& grid, std::span<const double> values) {
  const std::size_t n = grid.n_side();
  if (values.size() != grid.size()) throw std::invalid_argument("forward_transform: size mismatch");
  const std::size_t nh = n / 2 + 1;
  std::vector<double> in(values.begin(), values.end());
  std::vector<cplx> half(n * nh);
  fftw_execute_dft_r2c(cache().get(n).real_forward, in.data(), reinterpret_cast<fftw_complex*>(half.data()));
  // expand with c_{-k} = conj(c_k); the result is exactly conjugate symmetric
  const double scale = 1.0 / static_cast<double>(grid.size());
  std::vector<cplx> out(grid.size());
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const std::size_t j2 = (n - i2) % n;
    for (std::size_t i1 = 0; i1 < nh; ++i1) {
      const cplx c = half[i2 * nh + i1] * scale;
      out[i2 * n + i1] = c;
      out[j2 * n + (n - i1) % n] = std::conj(c);
    }
  }
  return out;
}

std::vector<cplx> inverse_transform_complex(const Grid2D& grid, std::span<const cplx> coefficients) {
  if (coefficients.size() != grid.size()) throw std::invalid_argument("inverse_transform: size mismatch");
  std::vector<cplx> in(coefficients.begin(), coefficients.end()), out(grid.size());
  execute(cache().get(grid.n_side()).backward, in, out);
  return out;
}

std::vector<double> inverse_transform(const Grid2D& grid, std::span<const cplx> coefficients) {
  const std::size_t n = grid.n_side();
  if (coefficients.size() != grid.size()) throw std::invalid_argument("inverse_transform: size mismatch");
  // The real part of the full inverse equals the c2r transform of the
  // symmetrized half spectrum.
  const std::size_t nh = n / 2 + 1;
  std::vector<cplx> half(n * nh);
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    const std::size_t j2 = (n - i2) % n;
    for (std::size_t i1 = 0; i1 < nh; ++i1)
      half[i2 * nh + i1] = 0.5 * (coefficients[i2 * n + i1] + std::conj(coefficients[j2 * n + (n - i1) % n]));
  }
  std::vector<double> values(grid.size());
  fftw_execute_dft_c2r(cache().get(n).real_backward, reinterpret_cast<fftw_complex*>(half.data()), values.data());
  return values;
}

}  // namespace gsqg
