#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nswp/classical.hpp"

using namespace nswp;

TEST_CASE("Hamilton's equations from coefficients") {
    const double fb = 0.5, t = 2.0, m = 1.0;
    const PhaseVelocity v = hamilton_rhs(QuadOp{0, 0, 0, -fb, fb * t / m, 7.0}, 0.3, 0.4, t);
    CHECK(v.x_dot == doctest::Approx(fb * t / m));
    CHECK(v.p_dot == doctest::Approx(fb));
    const PhaseVelocity zero = hamilton_rhs(QuadOp{}, 1.0, 2.0, 0.0);
    CHECK(zero.x_dot == 0.0);
    CHECK(zero.p_dot == 0.0);
    const PhaseVelocity osc = hamilton_rhs(QuadOp{0.5, 2.0, 0.1, 0, 0, 0}, 1.0, 3.0, 0.0);
    CHECK(osc.x_dot == doctest::Approx(3.0 + 0.1));
    CHECK(osc.p_dot == doctest::Approx(-(4.0 + 0.3)));
}

TEST_CASE("free Airy trajectory is the uniformly accelerated motion") {
    const ScenarioSpec spec(FreeAiry{1.0}, PhysicalParams{});
    const Trajectory traj = integrate(state_changing_family(spec), 0.0, 0.0, 3.0, 1e-3);
    CHECK(traj.samples.size() == 3001);
    for (const PhasePoint& s : traj.samples) CHECK(std::abs(s.x - spec.f_b() * s.t * s.t / 2.0) < tol::kFreeTrajectory);
    CHECK(traj.samples.back().t == 3.0);
}

TEST_CASE("oscillator trajectory over one period") {
    const ScenarioSpec spec(ShoDisplaced{1, 1.5, -0.5, 1.0}, PhysicalParams{1.0, 2.0});
    const double period = 2.0 * std::numbers::pi;
    const Trajectory traj = integrate(state_changing_family(spec), 1.5, 2.0 * -0.5, period, 1e-3);
    const CorrespondenceRecord rec = compare(traj, spec, {});
    CHECK(rec.max_scaled_deviation < tol::kTrajectory);
    CHECK(rec.peak_count == 0);
}

TEST_CASE("zero Hamiltonian keeps the point fixed") {
    const Trajectory traj = integrate(TimeQuadOp::constant(QuadOp{}), 0.7, -0.2, 1.0, 0.1);
    for (const PhasePoint& s : traj.samples) {
        CHECK(s.x == 0.7);
        CHECK(s.p == -0.2);
    }
}

TEST_CASE("the constant of H_c never enters") {
    const ScenarioSpec spec(LinearAiry{1.0, CosineDrive{0.5, 2.0}}, PhysicalParams{});
    const TimeQuadOp hc = state_changing_family(spec);
    const TimeQuadOp bare([hc](double t) {
        QuadOp op = hc(t);
        op.c_0 = 0.0;
        return op;
    });
    const Trajectory a = integrate(hc, 0.0, 0.0, 2.0, 1e-2);
    const Trajectory b = integrate(bare, 0.0, 0.0, 2.0, 1e-2);
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].x == b.samples[i].x);
        CHECK(a.samples[i].p == b.samples[i].p);
    }
}

TEST_CASE("comparison against peaks") {
    const ScenarioSpec spec(FreeAiry{1.0}, PhysicalParams{});
    const Trajectory traj = integrate(state_changing_family(spec), 0.0, 0.0, 1.0, 0.25);
    std::vector<std::pair<double, double>> peaks;
    for (const PhasePoint& s : traj.samples) peaks.emplace_back(s.t, -1.0188 + displacement(spec, s.t).d);
    const CorrespondenceRecord rec = compare(traj, spec, peaks);
    CHECK(rec.max_peak_deviation < 1e-12);
    CHECK(rec.peak_count == traj.samples.size());
    CHECK_THROWS_AS(compare(traj, spec, {{0.3, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(integrate(TimeQuadOp::constant(QuadOp{}), 0, 0, 1.0, 0.0), std::invalid_argument);
}
