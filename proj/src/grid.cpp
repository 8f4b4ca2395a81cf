#include "nswp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nswp {

Grid::Grid(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
        throw std::invalid_argument("grid: require finite x_min < x_max");
    if (n < 256 || (n & (n - 1)) != 0) {
        std::ostringstream msg;
        msg << "grid: n = " << n << " must be a power of two >= 256";
        throw std::invalid_argument(msg.str());
    }
}

double Grid::k(std::size_t j) const noexcept {
    const double dk = 2.0 * std::numbers::pi / length();
    const auto jj = static_cast<long long>(j);
    const auto nn = static_cast<long long>(n_);
    return dk * static_cast<double>(jj < nn / 2 ? jj : jj - nn);
}

void Window::validate(const Grid& grid) const {
    if (!(grid.x_min() < lo && lo < hi && hi < grid.x_max())) {
        std::ostringstream msg;
        msg << "window [" << lo << ", " << hi << "] must satisfy x_min < lo < hi < x_max for grid [" << grid.x_min()
            << ", " << grid.x_max() << "]";
        throw std::invalid_argument(msg.str());
    }
}

std::size_t Window::first_index(const Grid& grid) const {
    const double s = std::ceil((lo - grid.x_min()) / grid.dx() - 1e-9);
    return static_cast<std::size_t>(std::max(0.0, s));
}

std::size_t Window::last_index(const Grid& grid) const {
    const double s = std::floor((hi - grid.x_min()) / grid.dx() + 1e-9) + 1.0;
    return std::min(grid.size(), static_cast<std::size_t>(std::max(0.0, s)));
}

WaveFunction::WaveFunction(Grid g, std::vector<complex> s, double t) : grid(g), samples(std::move(s)), time(t) {
    if (samples.size() != grid.size()) throw std::invalid_argument("wavefunction: sample count differs from grid size");
}

}  // namespace nswp
