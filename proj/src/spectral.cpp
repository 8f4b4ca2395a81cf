#include "spectral.hpp"

#include <mutex>
#include <new>

namespace nswp::detail {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
    data_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (!data_) throw std::bad_alloc();
    auto* raw = reinterpret_cast<fftw_complex*>(data_);
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_1d(static_cast<int>(n), raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_1d(static_cast<int>(n), raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(inverse_);
    }
    fftw_free(data_);
}

void Fft::forward() noexcept { fftw_execute(forward_); }

void Fft::inverse_unscaled() noexcept { fftw_execute(inverse_); }

void Fft::inverse() noexcept {
    fftw_execute(inverse_);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t j = 0; j < n_; ++j) data_[j] *= scale;
}

}  // namespace nswp::detail
