#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nswp {

using complex = std::complex<double>;

/// Uniform periodic grid x_j = x_min + j dx, j = 0..n-1, dx = (x_max - x_min)/n.
class Grid {
public:
    /// Throws std::invalid_argument unless x_max > x_min and n >= 256 is a power of two.
    Grid(double x_min, double x_max, std::size_t n);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    std::size_t size() const noexcept { return n_; }
    double dx() const noexcept { return (x_max_ - x_min_) / static_cast<double>(n_); }
    double length() const noexcept { return x_max_ - x_min_; }
    double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx(); }

    /// Angular wavenumber of FFT bin j (standard ordering, Nyquist bin negative).
    double k(std::size_t j) const noexcept;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
};

/// Trusted sub-interval for norms and comparisons.
struct Window {
    double lo = 0.0;
    double hi = 0.0;

    /// Throws std::invalid_argument unless x_min < lo < hi < x_max.
    void validate(const Grid& grid) const;

    /// Half-open index range [first, last) of grid points with lo <= x <= hi.
    std::size_t first_index(const Grid& grid) const;
    std::size_t last_index(const Grid& grid) const;
};

struct WaveFunction {
    Grid grid;
    std::vector<complex> samples;
    double time = 0.0;

    WaveFunction(Grid g, std::vector<complex> s, double t);
    explicit WaveFunction(Grid g, double t = 0.0) : WaveFunction(g, std::vector<complex>(g.size()), t) {}
};

}  // namespace nswp
