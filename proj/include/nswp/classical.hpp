#pragma once

// Hamilton's equations generated by H_c(t), and their comparison with the
// closed-form displacement and with tracked quantum peaks.

#include <filesystem>
#include <utility>
#include <vector>

#include "nswp/opalg.hpp"
#include "nswp/scenarios.hpp"

namespace nswp {

struct PhasePoint {
    double t = 0.0;
    double x = 0.0;
    double p = 0.0;
};

struct Trajectory {
    std::vector<PhasePoint> samples;
};

struct PhaseVelocity {
    double x_dot = 0.0;
    double p_dot = 0.0;
};

/// (dH/dp, -dH/dx) of the frozen operator. The constant term never enters.
PhaseVelocity hamilton_rhs(const QuadOp& hc, double x, double p, double t);

/// Classic RK4 from (x0, p0) at t = 0 to t1 with step close to dt (the step is
/// shrunk so that t1 is hit exactly). Samples every step, including t = 0.
Trajectory integrate(const TimeQuadOp& hc, double x0, double p0, double t1, double dt);

struct CorrespondenceRecord {
    /// max |x_traj(t) - d(t)| over all trajectory samples.
    double max_closed_form_deviation = 0.0;
    /// max |x(t) - d(t)| / max(1, |d(t)|).
    double max_scaled_deviation = 0.0;
    /// max |(x(t) - x(0)) - (peak(t) - peak(0))| over the peak samples; 0 when none.
    double max_peak_deviation = 0.0;
    std::size_t peak_count = 0;
};

/// Peak times must coincide with trajectory sample times (to 1e-9); throws
/// std::invalid_argument otherwise.
CorrespondenceRecord compare(const Trajectory& traj, const ScenarioSpec& spec,
                             const std::vector<std::pair<double, double>>& peaks);

/// CSV rows `t,x,p`.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

}  // namespace nswp
