#include <cmath>

#include "doctest.h"
#include "nswp/scenarios.hpp"

using namespace nswp;

namespace {

struct Linear {
    double x, p, c;
};

QuadOp product(const Linear& u, const Linear& v) {
    return {u.p * v.p, u.x * v.x, u.x * v.p + u.p * v.x, u.x * v.c + u.c * v.x, u.p * v.c + u.c * v.p, u.c * v.c};
}

// Poisson bracket of two quadratic symbols; for Weyl-ordered quadratics the
// commutator is exactly i hbar times this.
QuadOp poisson(const QuadOp& a, const QuadOp& b) {
    const Linear ax{2 * a.c_xx, a.c_xp, a.c_x};
    const Linear ap{a.c_xp, 2 * a.c_pp, a.c_p};
    const Linear bx{2 * b.c_xx, b.c_xp, b.c_x};
    const Linear bp{b.c_xp, 2 * b.c_pp, b.c_p};
    return product(ax, bp) - product(ap, bx);
}

std::vector<ScenarioSpec> all_scenarios() {
    const PhysicalParams p{1.3, 0.8};
    return {
        ScenarioSpec(FreeAiry{1.2}, p),
        ScenarioSpec(LinearAiry{0.9, CosineDrive{0.5, 2.0}}, p),
        ScenarioSpec(LinearAiry{1.0, ConstantDrive{-0.4}}, p),
        ScenarioSpec(ShoDisplaced{3, 1.5, -0.7, 1.7}, p),
    };
}

}  // namespace

TEST_CASE("H~(t) obeys the von Neumann equation dH~/dt = {H, H~}") {
    for (const ScenarioSpec& spec : all_scenarios()) {
        CAPTURE(spec.name());
        const TimeQuadOp h = hamiltonian(spec);
        for (double t : {0.3, 1.0, 2.4}) {
            const double dt = 1e-4;
            const QuadOp derivative = (1.0 / (2.0 * dt)) * (tilde_hamiltonian(spec, t + dt).op -
                                                            tilde_hamiltonian(spec, t - dt).op);
            const QuadOp bracket = poisson(h(t), tilde_hamiltonian(spec, t).op);
            CHECK(max_abs_difference(derivative, bracket) < 1e-6);
        }
    }
}

TEST_CASE("H~(0) is the initial operator and the maps are symplectic") {
    for (const ScenarioSpec& spec : all_scenarios()) {
        CAPTURE(spec.name());
        CHECK(max_abs_difference(tilde_hamiltonian(spec, 0.0).op, initial_eigenpair(spec).op) < tol::kCoefficient);
        for (double t : {0.0, 0.7, 3.3}) CHECK(heisenberg_map(spec, t).is_symplectic(tol::kSymplecticResult));
    }
}

TEST_CASE("conjugation matches the closed forms") {
    for (const ScenarioSpec& spec : all_scenarios()) {
        CAPTURE(spec.name());
        for (int i = 0; i < 50; ++i) {
            const double t = 5.0 * i / 49.0;
            if (spec.is_airy()) {
                CHECK(max_abs_difference(tilde_hamiltonian(spec, t).op, quoted_tilde_hamiltonian(spec, t)) <
                      tol::kCoefficient * 10);
            } else {
                CHECK(max_abs_difference_nonconstant(tilde_hamiltonian(spec, t).op, quoted_tilde_hamiltonian(spec, t)) <
                      tol::kCoefficient * 10);
            }
        }
    }
}

TEST_CASE("free Airy H~ and H_c by hand") {
    const ScenarioSpec spec(FreeAiry{1.0}, PhysicalParams{});
    const double fb = 0.5;
    CHECK(spec.f_b() == fb);
    const QuadOp ht = tilde_hamiltonian(spec, 2.0).op;
    CHECK(approx_equal(ht, QuadOp{0.5, 0, 0, fb, -fb * 2.0, 0}));
    const QuadOp hc = state_changing_hamiltonian(spec, 2.0);
    CHECK(approx_equal(hc, QuadOp{0, 0, 0, -fb, fb * 2.0, 0}));
    CHECK(tilde_hamiltonian(spec, 2.0).value == 0.0);
}

TEST_CASE("oscillator constant terms") {
    const ScenarioSpec spec(ShoDisplaced{0, 2.0, 0.0, 1.0}, PhysicalParams{});
    const ShoConstantDiscrepancy d = sho_constant_discrepancy(spec, 1.0);
    CHECK(d.derived_tilde_constant == doctest::Approx(2.0));
    CHECK(d.quoted_tilde_constant == doctest::Approx(-2.0));
    CHECK(d.derived_changing_constant == doctest::Approx(-2.0));
    const double dd = 2.0 * std::cos(1.0);
    CHECK(d.quoted_changing_constant == doctest::Approx(0.5 * dd * dd));
    CHECK(d.quoted_sum_defect == doctest::Approx(-2.0 + 0.5 * dd * dd));
    CHECK_THROWS_AS(sho_constant_discrepancy(ScenarioSpec(FreeAiry{1.0}, PhysicalParams{}), 1.0), std::logic_error);
}

TEST_CASE("displacement derivatives are consistent") {
    for (const ScenarioSpec& spec : all_scenarios()) {
        CAPTURE(spec.name());
        const double h = 1e-5;
        for (double t : {0.5, 1.5}) {
            const Displacement d = displacement(spec, t);
            CHECK(d.d_dot == doctest::Approx((displacement(spec, t + h).d - displacement(spec, t - h).d) / (2 * h)).epsilon(1e-8));
            CHECK(d.d_ddot ==
                  doctest::Approx((displacement(spec, t + h).d_dot - displacement(spec, t - h).d_dot) / (2 * h)).epsilon(1e-7));
        }
    }
}

TEST_CASE("scenario validation") {
    CHECK_THROWS_AS(ScenarioSpec(FreeAiry{0.0}, PhysicalParams{}), std::invalid_argument);
    CHECK_THROWS_AS(ScenarioSpec(ShoDisplaced{-1, 0, 0, 1}, PhysicalParams{}), std::invalid_argument);
    CHECK_THROWS_AS(ScenarioSpec(ShoDisplaced{0, 0, 0, -1}, PhysicalParams{}), std::invalid_argument);
    CHECK_THROWS_AS(ScenarioSpec(FreeAiry{1.0}, PhysicalParams{0.0, 1.0}), std::invalid_argument);
    const ScenarioSpec sho(ShoDisplaced{1, 0, 0, 1}, PhysicalParams{});
    CHECK_THROWS_AS(sho.f_b(), std::logic_error);
    CHECK_THROWS_AS(alpha(sho, 1.0), std::logic_error);
    CHECK(sho.name() == "sho");
    CHECK(initial_eigenpair(sho).value == doctest::Approx(1.5));
}
