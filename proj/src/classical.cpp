#include "nswp/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nswp {

PhaseVelocity hamilton_rhs(const QuadOp& hc, double x, double p, double /*t*/) {
    return {2.0 * hc.c_pp * p + hc.c_xp * x + hc.c_p, -(2.0 * hc.c_xx * x + hc.c_xp * p + hc.c_x)};
}

Trajectory integrate(const TimeQuadOp& hc, double x0, double p0, double t1, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
    if (!(t1 >= 0.0)) throw std::invalid_argument("integrate: t1 must be >= 0");
    const auto steps = static_cast<long long>(std::ceil(t1 / dt - 1e-9));
    const double h = steps > 0 ? t1 / static_cast<double>(steps) : 0.0;

    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
    double x = x0;
    double p = p0;
    traj.samples.push_back({0.0, x, p});
    for (long long i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * h;
        const QuadOp op0 = hc(t);
        const QuadOp op_half = hc(t + 0.5 * h);
        const QuadOp op1 = hc(t + h);
        const PhaseVelocity k1 = hamilton_rhs(op0, x, p, t);
        const PhaseVelocity k2 = hamilton_rhs(op_half, x + 0.5 * h * k1.x_dot, p + 0.5 * h * k1.p_dot, t + 0.5 * h);
        const PhaseVelocity k3 = hamilton_rhs(op_half, x + 0.5 * h * k2.x_dot, p + 0.5 * h * k2.p_dot, t + 0.5 * h);
        const PhaseVelocity k4 = hamilton_rhs(op1, x + h * k3.x_dot, p + h * k3.p_dot, t + h);
        x += h / 6.0 * (k1.x_dot + 2.0 * k2.x_dot + 2.0 * k3.x_dot + k4.x_dot);
        p += h / 6.0 * (k1.p_dot + 2.0 * k2.p_dot + 2.0 * k3.p_dot + k4.p_dot);
        traj.samples.push_back({static_cast<double>(i + 1) * h, x, p});
    }
    return traj;
}

CorrespondenceRecord compare(const Trajectory& traj, const ScenarioSpec& spec,
                             const std::vector<std::pair<double, double>>& peaks) {
    if (traj.samples.empty()) throw std::invalid_argument("compare: empty trajectory");
    CorrespondenceRecord rec;
    for (const PhasePoint& s : traj.samples) {
        const double d = displacement(spec, s.t).d;
        const double dev = std::abs(s.x - d);
        rec.max_closed_form_deviation = std::max(rec.max_closed_form_deviation, dev);
        rec.max_scaled_deviation = std::max(rec.max_scaled_deviation, dev / std::max(1.0, std::abs(d)));
    }

    if (peaks.empty()) return rec;
    auto sample_at = [&](double t) -> const PhasePoint& {
        auto it = std::lower_bound(traj.samples.begin(), traj.samples.end(), t - 1e-9,
                                   [](const PhasePoint& s, double v) { return s.t < v; });
        if (it == traj.samples.end() || std::abs(it->t - t) > 1e-9) {
            std::ostringstream msg;
            msg << "compare: peak time " << t << " is not a trajectory sample time";
            throw std::invalid_argument(msg.str());
        }
        return *it;
    };
    const double x_ref = sample_at(peaks.front().first).x;
    const double peak_ref = peaks.front().second;
    for (const auto& [t, peak] : peaks) {
        const double dev = std::abs((sample_at(t).x - x_ref) - (peak - peak_ref));
        rec.max_peak_deviation = std::max(rec.max_peak_deviation, dev);
    }
    rec.peak_count = peaks.size();
    return rec;
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "t,x,p\n";
    char line[96];
    for (const PhasePoint& s : traj.samples) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", s.t, s.x, s.p);
        out << line;
    }
}

}  // namespace nswp
