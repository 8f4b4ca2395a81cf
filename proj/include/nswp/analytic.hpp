#pragma once

// Closed-form nonspreading solutions
//   Psi(x, t) = envelope(x - d(t)) exp[(i/hbar) (m d'(t) x + C(t))]
// with envelope Ai(b .) for the Airy scenarios and psi_n for the oscillator.

#include "nswp/grid.hpp"
#include "nswp/scenarios.hpp"

namespace nswp {

/// phi(x, t) = linear_in_x * x + constant.
struct PhaseBreakdown {
    double linear_in_x = 0.0;  // m d'(t)
    double constant = 0.0;     // C(t), zero at t = 0
};

/// Free space:   C = -f_b^2 t^3 / 3m
/// Linear drive: C = -f_b^2 t^3 / 3m - (f_b t / m) beta(t) - (1/2m) int_0^t alpha^2
/// Oscillator:   C = -E_n t - int_0^t [(m/2) d'^2 - (m/2) w^2 d^2]
/// Propagates QuadratureRangeError from tabulated drives.
PhaseBreakdown phase_breakdown(const ScenarioSpec& spec, double t);

/// Envelope only: Ai(b (x - d)) or psi_n(x - d).
double analytic_envelope(const ScenarioSpec& spec, double x, double t);

complex analytic_value(const ScenarioSpec& spec, double x, double t);

WaveFunction analytic_wavefunction(const ScenarioSpec& spec, const Grid& grid, double t);

/// Normalized Gaussian with position spread sigma0 (standard deviation of |psi|^2).
WaveFunction gaussian_packet(const Grid& grid, double x0, double sigma0, double k0 = 0.0);

/// sigma(t) of a free Gaussian: sigma0 sqrt(1 + (hbar t / (2 m sigma0^2))^2).
double free_gaussian_width(double sigma0, double t, const PhysicalParams& params);

}  // namespace nswp
