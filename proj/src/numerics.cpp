#include "nswp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nswp/errors.hpp"
#include "spectral.hpp"

namespace nswp {

namespace {

// Multiplier for the odd derivative: the Nyquist bin has no consistent sign.
double odd_k(const Grid& g, std::size_t j) { return j == g.size() / 2 ? 0.0 : g.k(j); }

// p psi (order 1) or p^2 psi (order 2), spectrally.
std::vector<complex> apply_momentum(const std::vector<complex>& in, const Grid& g, double hbar, int order) {
    detail::Fft fft(g.size());
    auto data = fft.data();
    std::copy(in.begin(), in.end(), data.begin());
    fft.forward();
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double hk = order == 1 ? hbar * odd_k(g, j) : hbar * hbar * g.k(j) * g.k(j);
        data[j] *= hk;
    }
    fft.inverse();
    return {data.begin(), data.end()};
}

void require_same_grid(const WaveFunction& a, const WaveFunction& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("wavefunctions live on different grids");
}

bool near_zero(double v) { return std::abs(v) <= tol::kCoefficient; }

}  // namespace

void PropagatorConfig::validate() const {
    if (!(steps_per_unit_time >= 1.0) || !std::isfinite(steps_per_unit_time))
        throw std::invalid_argument("propagator: steps per unit time must be >= 1");
    if (!(mask_fraction >= 0.0 && mask_fraction <= 0.25))
        throw std::invalid_argument("propagator: mask_fraction must lie in [0, 0.25]");
}

WaveFunction apply_quadop(const QuadOp& op, const WaveFunction& psi, const PhysicalParams& params) {
    const Grid& g = psi.grid;
    const std::size_t n = g.size();
    const auto& s = psi.samples;

    std::vector<complex> p1;
    std::vector<complex> p2;
    std::vector<complex> p_of_x;
    if (op.c_p != 0.0 || op.c_xp != 0.0) p1 = apply_momentum(s, g, params.hbar, 1);
    if (op.c_pp != 0.0) p2 = apply_momentum(s, g, params.hbar, 2);
    if (op.c_xp != 0.0) {
        std::vector<complex> xs(n);
        for (std::size_t j = 0; j < n; ++j) xs[j] = g.x(j) * s[j];
        p_of_x = apply_momentum(xs, g, params.hbar, 1);
    }

    WaveFunction out(g, psi.time);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = g.x(j);
        complex v = (op.c_xx * x * x + op.c_x * x + op.c_0) * s[j];
        if (!p2.empty()) v += op.c_pp * p2[j];
        if (op.c_p != 0.0) v += op.c_p * p1[j];
        if (op.c_xp != 0.0) v += op.c_xp * 0.5 * (x * p1[j] + p_of_x[j]);
        out.samples[j] = v;
    }
    return out;
}

double eigen_residual(const QuadOp& op, double e_tilde, const WaveFunction& psi, const Window& window,
                      const PhysicalParams& params) {
    window.validate(psi.grid);
    const WaveFunction h_psi = apply_quadop(op, psi, params);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = window.first_index(psi.grid); j < window.last_index(psi.grid); ++j) {
        num += std::norm(h_psi.samples[j] - e_tilde * psi.samples[j]);
        den += std::norm(psi.samples[j]);
    }
    if (!(den > 0.0)) throw ZeroNormError("eigen_residual: state vanishes on the window");
    return std::sqrt(num / den);
}

std::vector<double> absorbing_mask(const Grid& grid, double fraction) {
    std::vector<double> mask(grid.size(), 1.0);
    if (fraction <= 0.0) return mask;
    const double width = fraction * grid.length();
    const double inner_lo = grid.x_min() + width;
    const double inner_hi = grid.x_max() - width;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        double depth = 0.0;
        if (x < inner_lo) depth = (inner_lo - x) / width;
        else if (x > inner_hi) depth = (x - inner_hi) / width;
        if (depth > 0.0) {
            const double c = std::cos(0.5 * std::numbers::pi * std::min(depth, 1.0));
            mask[j] = c * c;
        }
    }
    return mask;
}

WaveFunction apply_mask(const WaveFunction& psi, double fraction) {
    const std::vector<double> mask = absorbing_mask(psi.grid, fraction);
    WaveFunction out = psi;
    for (std::size_t j = 0; j < mask.size(); ++j) out.samples[j] *= mask[j];
    return out;
}

WaveFunction propagate(const TimeQuadOp& h, const WaveFunction& psi0, double t1, const PropagatorConfig& cfg,
                       const PhysicalParams& params) {
    cfg.validate();
    const double t0 = psi0.time;
    if (!(t1 >= t0)) throw std::invalid_argument("propagate: t1 must not precede the state's time");
    if (t1 == t0) return psi0;

    const Grid& g = psi0.grid;
    const std::size_t n = g.size();
    const double hbar = params.hbar;
    const long long steps = std::max(1LL, std::llround(cfg.steps_per_unit_time * (t1 - t0)));
    const double dt = (t1 - t0) / static_cast<double>(steps);

    const bool masked = cfg.mask_fraction > 0.0;
    const std::vector<double> mask = masked ? absorbing_mask(g, cfg.mask_fraction) : std::vector<double>{};

    detail::Fft fft(n);
    auto data = fft.data();
    std::copy(psi0.samples.begin(), psi0.samples.end(), data.begin());

    std::vector<complex> kinetic(n);
    std::vector<complex> half_potential(n);
    QuadOp cached;
    bool have_cache = false;

    for (long long step = 0; step < steps; ++step) {
        const double tm = t0 + (static_cast<double>(step) + 0.5) * dt;
        const QuadOp op = h(tm);
        if (!near_zero(op.c_xp) || !near_zero(op.c_p)) {
            std::ostringstream msg;
            msg << "propagate: split-step needs c_xp = c_p = 0, got " << op << " at t = " << tm;
            throw UnsupportedOperator(msg.str());
        }
        if (!have_cache || op.c_pp != cached.c_pp) {
            // The inverse transform's 1/n is folded into the kinetic factor.
            const double scale = 1.0 / static_cast<double>(n);
            for (std::size_t j = 0; j < n; ++j) {
                const double hk = hbar * g.k(j);
                kinetic[j] = scale * std::polar(1.0, -op.c_pp * hk * hk * dt / hbar);
            }
        }
        if (!have_cache || op.c_xx != cached.c_xx || op.c_x != cached.c_x || op.c_0 != cached.c_0) {
            for (std::size_t j = 0; j < n; ++j) {
                const double x = g.x(j);
                const double v = op.c_xx * x * x + op.c_x * x + op.c_0;
                half_potential[j] = std::polar(1.0, -0.5 * v * dt / hbar);
            }
        }
        cached = op;
        have_cache = true;

        if (masked)
            for (std::size_t j = 0; j < n; ++j) data[j] *= mask[j];
        for (std::size_t j = 0; j < n; ++j) data[j] *= half_potential[j];
        fft.forward();
        for (std::size_t j = 0; j < n; ++j) data[j] *= kinetic[j];
        fft.inverse_unscaled();
        for (std::size_t j = 0; j < n; ++j) data[j] *= half_potential[j];
    }

    return WaveFunction(g, std::vector<complex>(data.begin(), data.end()), t1);
}

WaveFunction hc_step(const QuadOp& hc, const WaveFunction& psi, double dt, const PhysicalParams& params) {
    if (!is_linear(hc)) {
        std::ostringstream msg;
        msg << "hc_step: operator is not linear in x and p: " << hc;
        throw NonlinearOperator(msg.str());
    }
    const Grid& g = psi.grid;
    const double a = hc.c_p;
    const double b = hc.c_x;
    const double hbar = params.hbar;

    WaveFunction out(g, psi.time + dt);
    const double constant_phase = -(hc.c_0 * dt + 0.5 * a * b * dt * dt) / hbar;
    for (std::size_t j = 0; j < g.size(); ++j)
        out.samples[j] = psi.samples[j] * std::polar(1.0, -b * g.x(j) * dt / hbar + constant_phase);

    const double shift = a * dt;
    if (shift != 0.0) {
        detail::Fft fft(g.size());
        auto data = fft.data();
        std::copy(out.samples.begin(), out.samples.end(), data.begin());
        fft.forward();
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double k = g.k(j);
            data[j] *= j == g.size() / 2 ? complex(std::cos(k * shift), 0.0) : std::polar(1.0, -k * shift);
        }
        fft.inverse();
        std::copy(data.begin(), data.end(), out.samples.begin());
    }
    return out;
}

WaveFunction phase_step(const WaveFunction& psi, double energy, double dt, const PhysicalParams& params) {
    WaveFunction out = psi;
    const complex factor = std::polar(1.0, -energy * dt / params.hbar);
    for (auto& v : out.samples) v *= factor;
    out.time = psi.time + dt;
    return out;
}

double windowed_error(const WaveFunction& a, const WaveFunction& b, const Window& window) {
    require_same_grid(a, b);
    window.validate(a.grid);
    const std::size_t lo = window.first_index(a.grid);
    const std::size_t hi = window.last_index(a.grid);

    complex overlap = 0.0;
    for (std::size_t j = lo; j < hi; ++j) overlap += a.samples[j] * std::conj(b.samples[j]);
    const complex align = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : complex(1.0);

    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
        num += std::norm(a.samples[j] * align - b.samples[j]);
        den += std::norm(b.samples[j]);
    }
    if (!(den > 0.0)) throw ZeroNormError("windowed_error: reference state vanishes on the window");
    return std::sqrt(num / den);
}

double windowed_difference(const WaveFunction& a, const WaveFunction& b, const Window& window) {
    require_same_grid(a, b);
    window.validate(a.grid);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = window.first_index(a.grid); j < window.last_index(a.grid); ++j) {
        num += std::norm(a.samples[j] - b.samples[j]);
        den += std::norm(b.samples[j]);
    }
    if (!(den > 0.0)) throw ZeroNormError("windowed_difference: reference state vanishes on the window");
    return std::sqrt(num / den);
}

double peak_track(const WaveFunction& psi, const Window& window) {
    window.validate(psi.grid);
    const std::size_t lo = window.first_index(psi.grid);
    const std::size_t hi = window.last_index(psi.grid);
    if (hi < lo + 3) throw PeakTrackError("peak_track: window holds fewer than three points");

    std::size_t best = lo;
    double best_value = std::norm(psi.samples[lo]);
    for (std::size_t j = lo + 1; j < hi; ++j) {
        const double v = std::norm(psi.samples[j]);
        if (v > best_value) {
            best_value = v;
            best = j;
        }
    }
    if (best == lo || best == hi - 1) {
        std::ostringstream msg;
        msg << "peak_track: maximum on window edge at x = " << psi.grid.x(best);
        throw PeakTrackError(msg.str());
    }
    const double ym = std::norm(psi.samples[best - 1]);
    const double y0 = best_value;
    const double yp = std::norm(psi.samples[best + 1]);
    const double curvature = ym - 2.0 * y0 + yp;
    const double offset = curvature < 0.0 ? 0.5 * (ym - yp) / curvature : 0.0;
    const double seed = psi.grid.x(best) + offset * psi.grid.dx();

    // Newton on d|psi|^2/dx of the trigonometric interpolant; the parabola
    // alone is biased by a few percent of a cell on coarse grids.
    const Grid& g = psi.grid;
    const std::size_t n = g.size();
    detail::Fft fft(n);
    std::copy(psi.samples.begin(), psi.samples.end(), fft.data().begin());
    fft.forward();
    std::vector<complex> coeff(fft.data().begin(), fft.data().end());
    coeff[n / 2] = 0.0;
    const double dk = 2.0 * std::numbers::pi / g.length();
    double x = seed;
    for (int iter = 0; iter < 8; ++iter) {
        const complex step = std::exp(complex{0.0, dk * (x - g.x_min())});
        complex rot_pos{1.0, 0.0};
        complex f{}, f1{}, f2{};
        for (std::size_t j = 0; j <= n / 2; ++j) {
            // positive mode j and its negative partner n - j share one rotation
            const double kp = g.k(j);
            const complex ep = coeff[j] * rot_pos;
            f += ep;
            f1 += complex{0.0, kp} * ep;
            f2 += -kp * kp * ep;
            if (j != 0 && j != n / 2) {
                const double km = g.k(n - j);
                const complex em = coeff[n - j] * std::conj(rot_pos);
                f += em;
                f1 += complex{0.0, km} * em;
                f2 += -km * km * em;
            }
            rot_pos *= step;
        }
        const double d1 = 2.0 * std::real(std::conj(f) * f1);
        const double d2 = 2.0 * (std::norm(f1) + std::real(std::conj(f) * f2));
        if (!(d2 < 0.0)) break;
        const double dx = std::clamp(-d1 / d2, -0.5 * g.dx(), 0.5 * g.dx());
        x += dx;
        if (std::abs(dx) < 1e-12 * g.dx()) break;
    }
    if (std::abs(x - seed) > g.dx()) return seed;
    return x;
}

double position_mean(const WaveFunction& psi, const Window& window) {
    window.validate(psi.grid);
    double w = 0.0;
    double wx = 0.0;
    for (std::size_t j = window.first_index(psi.grid); j < window.last_index(psi.grid); ++j) {
        const double rho = std::norm(psi.samples[j]);
        w += rho;
        wx += rho * psi.grid.x(j);
    }
    if (!(w > 0.0)) throw ZeroNormError("position_mean: state vanishes on the window");
    return wx / w;
}

double position_spread(const WaveFunction& psi, const Window& window) {
    const double mean = position_mean(psi, window);
    double w = 0.0;
    double wxx = 0.0;
    for (std::size_t j = window.first_index(psi.grid); j < window.last_index(psi.grid); ++j) {
        const double rho = std::norm(psi.samples[j]);
        const double u = psi.grid.x(j) - mean;
        w += rho;
        wxx += rho * u * u;
    }
    return std::sqrt(wxx / w);
}

double norm_squared(const WaveFunction& psi) {
    double acc = 0.0;
    for (const auto& v : psi.samples) acc += std::norm(v);
    return acc * psi.grid.dx();
}

void write_snapshot_csv(const std::filesystem::path& path, const WaveFunction& psi) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "x,re,im,abs2\n";
    char line[128];
    for (std::size_t j = 0; j < psi.grid.size(); ++j) {
        const complex v = psi.samples[j];
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", psi.grid.x(j), v.real(), v.imag(), std::norm(v));
        out << line;
    }
}

}  // namespace nswp
