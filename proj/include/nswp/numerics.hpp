#pragma once

// Grid realization of operator action and time evolution. p = -i hbar d/dx is
// applied spectrally on the periodic grid, x pointwise.

#include <filesystem>
#include <vector>

#include "nswp/grid.hpp"
#include "nswp/opalg.hpp"
#include "nswp/scenarios.hpp"

namespace nswp {

struct PropagatorConfig {
    double steps_per_unit_time = 4096.0;
    /// Fraction of the domain, per edge, under the cos^2 absorbing mask.
    double mask_fraction = 0.1;

    /// Throws std::invalid_argument unless steps >= 1 and 0 <= mask_fraction <= 0.25.
    void validate() const;
};

/// op psi. The symmetrized xp term is the mean of x(p psi) and p(x psi).
WaveFunction apply_quadop(const QuadOp& op, const WaveFunction& psi, const PhysicalParams& params);

/// ||(op - e_tilde) psi|| / ||psi|| over the window. Throws ZeroNormError if psi
/// vanishes there.
double eigen_residual(const QuadOp& op, double e_tilde, const WaveFunction& psi, const Window& window,
                      const PhysicalParams& params);

/// cos^2 taper: 1 in the interior, falling to 0 at each edge over `fraction`
/// of the domain length.
std::vector<double> absorbing_mask(const Grid& grid, double fraction);

/// psi multiplied pointwise by absorbing_mask(grid, fraction).
WaveFunction apply_mask(const WaveFunction& psi, double fraction);

/// Strang split-step evolution of psi0 (at psi0.time) to t1 under h(t):
/// half potential, full kinetic (spectral), half potential, with coefficients
/// sampled at each step's midpoint. The mask multiplies the state before every
/// step. The number of steps is round(steps_per_unit_time * (t1 - t0)), at
/// least 1 when t1 > t0; t1 == t0 returns psi0 unchanged.
/// Throws UnsupportedOperator if h carries xp or p terms at any sampled time.
WaveFunction propagate(const TimeQuadOp& h, const WaveFunction& psi0, double t1, const PropagatorConfig& cfg,
                       const PhysicalParams& params);

/// Exact evolution for dt under the frozen linear operator a p + b x + c:
/// multiply by exp[-i (b x + c) dt/hbar - i a b dt^2 / (2 hbar)], then
/// translate by a dt (spectrally). Throws NonlinearOperator otherwise.
WaveFunction hc_step(const QuadOp& hc, const WaveFunction& psi, double dt, const PhysicalParams& params);

/// psi multiplied by exp(-i energy dt / hbar).
WaveFunction phase_step(const WaveFunction& psi, double energy, double dt, const PhysicalParams& params);

/// ||a e^{-i theta} - b|| / ||b|| over the window, theta the L2-optimal global
/// phase (argument of the overlap sum a conj(b)). Throws std::invalid_argument
/// on grid mismatch and ZeroNormError if b vanishes on the window.
double windowed_error(const WaveFunction& a, const WaveFunction& b, const Window& window);

/// Same norm without phase alignment.
double windowed_difference(const WaveFunction& a, const WaveFunction& b, const Window& window);

/// Position of the maximum of |psi|^2 in the window: a three-point parabola
/// seeds Newton iteration on the trigonometric interpolant, so psi should be
/// smooth across the periodic boundary (masked). Throws PeakTrackError when
/// the maximum sits on the window edge.
double peak_track(const WaveFunction& psi, const Window& window);

/// sqrt(<x^2> - <x>^2) of |psi|^2 over the window.
double position_spread(const WaveFunction& psi, const Window& window);

/// <x> of |psi|^2 over the window.
double position_mean(const WaveFunction& psi, const Window& window);

/// sum |psi_j|^2 dx over the whole grid.
double norm_squared(const WaveFunction& psi);

/// CSV rows `x,re,im,abs2` with a header line.
void write_snapshot_csv(const std::filesystem::path& path, const WaveFunction& psi);

}  // namespace nswp
