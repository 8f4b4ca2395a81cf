#include "nswp/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nswp/special.hpp"

namespace nswp {

PhaseBreakdown phase_breakdown(const ScenarioSpec& spec, double t) {
    const Displacement d = displacement(spec, t);
    const double m = spec.params().mass;
    PhaseBreakdown out;
    out.linear_in_x = m * d.d_dot;

    switch (spec.kind()) {
        case ScenarioKind::FreeAiry: {
            const double fb = spec.f_b();
            out.constant = -fb * fb * t * t * t / (3.0 * m);
            break;
        }
        case ScenarioKind::LinearAiry: {
            const double fb = spec.f_b();
            const Drive& drive = spec.linear().drive;
            out.constant = -fb * fb * t * t * t / (3.0 * m) - fb * t / m * drive.beta(t) -
                           drive.alpha_sq_integral(t) / (2.0 * m);
            break;
        }
        case ScenarioKind::ShoDisplaced: {
            const ShoDisplaced& s = spec.sho();
            const double w = s.omega;
            const double e_n = (s.n + 0.5) * spec.params().hbar * w;
            // int_0^t (d'^2 - w^2 d^2) = (v0^2 - w^2 d0^2) sin(2wt)/(2w) - 2 v0 d0 sin^2(wt)
            const double sw = std::sin(w * t);
            const double lagrangian_integral =
                (s.v0 * s.v0 - w * w * s.d0 * s.d0) * std::sin(2.0 * w * t) / (2.0 * w) - 2.0 * s.v0 * s.d0 * sw * sw;
            out.constant = -e_n * t - 0.5 * m * lagrangian_integral;
            break;
        }
    }
    return out;
}

double analytic_envelope(const ScenarioSpec& spec, double x, double t) {
    const double d = displacement(spec, t).d;
    if (spec.is_airy()) return airy_ai(spec.b() * (x - d));
    const ShoDisplaced& s = spec.sho();
    return sho_eigenfunction(s.n, x - d, spec.params(), s.omega);
}

complex analytic_value(const ScenarioSpec& spec, double x, double t) {
    const PhaseBreakdown phase = phase_breakdown(spec, t);
    const double phi = (phase.linear_in_x * x + phase.constant) / spec.params().hbar;
    return analytic_envelope(spec, x, t) * std::polar(1.0, phi);
}

WaveFunction analytic_wavefunction(const ScenarioSpec& spec, const Grid& grid, double t) {
    const Displacement d = displacement(spec, t);
    const PhaseBreakdown phase = phase_breakdown(spec, t);
    const double hbar = spec.params().hbar;

    WaveFunction psi(grid, t);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        double envelope;
        if (spec.is_airy()) {
            envelope = airy_ai(spec.b() * (x - d.d));
        } else {
            const ShoDisplaced& s = spec.sho();
            envelope = sho_eigenfunction(s.n, x - d.d, spec.params(), s.omega);
        }
        psi.samples[j] = envelope * std::polar(1.0, (phase.linear_in_x * x + phase.constant) / hbar);
    }
    return psi;
}

WaveFunction gaussian_packet(const Grid& grid, double x0, double sigma0, double k0) {
    if (!(sigma0 > 0.0)) throw std::invalid_argument("gaussian_packet: sigma0 must be > 0");
    const double norm = std::pow(2.0 * std::numbers::pi * sigma0 * sigma0, -0.25);
    WaveFunction psi(grid, 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double u = grid.x(j) - x0;
        psi.samples[j] = norm * std::exp(-u * u / (4.0 * sigma0 * sigma0)) * std::polar(1.0, k0 * grid.x(j));
    }
    return psi;
}

double free_gaussian_width(double sigma0, double t, const PhysicalParams& params) {
    const double r = params.hbar * t / (2.0 * params.mass * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + r * r);
}

}  // namespace nswp
