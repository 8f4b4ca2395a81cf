#include <cmath>
#include <complex>

#include "doctest.h"
#include "nswp/analytic.hpp"
#include "nswp/numerics.hpp"

using namespace nswp;

namespace {

constexpr complex I{0.0, 1.0};

struct Derivs {
    complex value, dx, dxx, dt;
};

// Fourth-order central differences of the closed-form solution.
Derivs derivatives(const ScenarioSpec& spec, double x, double t) {
    const double h = 1e-3;
    auto f = [&](double xx, double tt) { return analytic_value(spec, xx, tt); };
    Derivs d;
    d.value = f(x, t);
    d.dx = (-f(x + 2 * h, t) + 8.0 * f(x + h, t) - 8.0 * f(x - h, t) + f(x - 2 * h, t)) / (12.0 * h);
    d.dxx = (-f(x + 2 * h, t) + 16.0 * f(x + h, t) - 30.0 * d.value + 16.0 * f(x - h, t) - f(x - 2 * h, t)) /
            (12.0 * h * h);
    d.dt = (-f(x, t + 2 * h) + 8.0 * f(x, t + h) - 8.0 * f(x, t - h) + f(x, t - 2 * h)) / (12.0 * h);
    return d;
}

// op psi at x from the finite-difference derivatives (p = -i hbar d/dx).
complex apply(const QuadOp& op, const Derivs& d, double x, double hbar) {
    const complex p_psi = -I * hbar * d.dx;
    const complex pp_psi = -hbar * hbar * d.dxx;
    // (xp + px)/2 psi = x p psi - i hbar psi / 2
    const complex xp_psi = x * p_psi - 0.5 * I * hbar * d.value;
    return op.c_pp * pp_psi + op.c_xx * x * x * d.value + op.c_xp * xp_psi + op.c_x * x * d.value +
           op.c_p * p_psi + op.c_0 * d.value;
}

std::vector<ScenarioSpec> scenarios() {
    const PhysicalParams p{1.1, 0.9};
    return {
        ScenarioSpec(FreeAiry{1.0}, p),
        ScenarioSpec(LinearAiry{1.2, CosineDrive{0.5, 2.0}}, p),
        ScenarioSpec(ShoDisplaced{2, 1.0, 0.5, 1.3}, p),
    };
}

}  // namespace

TEST_CASE("closed-form states solve the Schrodinger equation") {
    for (const ScenarioSpec& spec : scenarios()) {
        CAPTURE(spec.name());
        const double hbar = spec.params().hbar;
        const TimeQuadOp h = hamiltonian(spec);
        for (double t : {0.4, 1.3}) {
            for (double x = -4.0; x <= 2.5; x += 0.37) {
                const double xs = x + displacement(spec, t).d;
                const Derivs d = derivatives(spec, xs, t);
                const complex lhs = I * hbar * d.dt;
                CHECK(std::abs(lhs - apply(h(t), d, xs, hbar)) < 1e-7);
                // Reduced equation: i hbar dPsi/dt = (H_c + E~) Psi.
                const complex reduced = apply(state_changing_hamiltonian(spec, t), d, xs, hbar) +
                                        tilde_hamiltonian(spec, t).value * d.value;
                CHECK(std::abs(lhs - reduced) < 1e-7);
                // Instantaneous eigenvalue equation.
                const Eigenpair ep = tilde_hamiltonian(spec, t);
                CHECK(std::abs(apply(ep.op, d, xs, hbar) - ep.value * d.value) < 1e-7);
            }
        }
    }
}

TEST_CASE("envelope translates rigidly") {
    for (const ScenarioSpec& spec : scenarios()) {
        const double shift = displacement(spec, 1.7).d - displacement(spec, 0.0).d;
        for (double x : {-3.0, -0.5, 0.8}) {
            CHECK(std::abs(analytic_value(spec, x + shift, 1.7)) ==
                  doctest::Approx(std::abs(analytic_value(spec, x, 0.0))).epsilon(1e-12));
        }
    }
}

TEST_CASE("phase at t = 0 vanishes for Airy states") {
    const ScenarioSpec spec(FreeAiry{1.0}, PhysicalParams{});
    const PhaseBreakdown ph = phase_breakdown(spec, 0.0);
    CHECK(ph.linear_in_x == 0.0);
    CHECK(ph.constant == 0.0);
    CHECK(analytic_value(spec, -1.0, 0.0).imag() == 0.0);
}

TEST_CASE("Gaussian control packet") {
    const Grid grid(-40.0, 40.0, 4096);
    const WaveFunction g = gaussian_packet(grid, 1.5, 0.8, 0.3);
    CHECK(norm_squared(g) == doctest::Approx(1.0).epsilon(1e-12));
    const Window w{-30.0, 30.0};
    CHECK(position_mean(g, w) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(position_spread(g, w) == doctest::Approx(0.8).epsilon(1e-10));
    const PhysicalParams p{1.0, 2.0};
    CHECK(free_gaussian_width(0.8, 0.0, p) == 0.8);
    CHECK(free_gaussian_width(0.8, 3.0, p) == doctest::Approx(0.8 * std::sqrt(1.0 + std::pow(3.0 / (4.0 * 0.64), 2))));
}
