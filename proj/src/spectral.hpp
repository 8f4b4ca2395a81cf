#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <fftw3.h>

namespace nswp::detail {

/// In-place complex FFT pair on an FFTW-owned buffer. Planning goes through a
/// process-wide lock (the FFTW planner is not reentrant); execution is not.
/// FFTW_ESTIMATE keeps the plans, and therefore the results, deterministic.
class Fft {
public:
    explicit Fft(std::size_t n);
    ~Fft();

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::span<std::complex<double>> data() noexcept { return {data_, n_}; }

    void forward() noexcept;
    /// Includes the 1/n normalization.
    void inverse() noexcept;
    /// Leaves the factor n in place for callers that fold it elsewhere.
    void inverse_unscaled() noexcept;

private:
    std::size_t n_;
    std::complex<double>* data_;
    fftw_plan forward_;
    fftw_plan inverse_;
};

}  // namespace nswp::detail
