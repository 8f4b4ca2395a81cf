#pragma once

// The four batch commands behind the `nswp` executable. Each writes into
// cfg.output_dir (created if missing): a deterministic `<command>.json`
// report, a `<command>.metadata.json` with the timestamp, and CSV data.

#include <vector>

#include "nswp/classical.hpp"
#include "nswp/config.hpp"
#include "nswp/grid.hpp"
#include "nswp/report.hpp"
#include "nswp/scenarios.hpp"

namespace nswp {

/// Conjugation vs closed form, eigen residual, decomposition sum, E~ invariance,
/// spatial shift and classical correspondence, each behind its toggle.
VerificationReport cmd_verify(const RunConfig& cfg);

/// Propagates the initial state under H(t) to every sample time and writes
/// `snapshot_NNN.csv` (x,re,im,abs2).
VerificationReport cmd_evolve(const RunConfig& cfg);

/// Windowed, phase-aligned error against the closed form at every sample time,
/// at `steps` and `2 steps`; writes `compare.csv` (t,error,error_doubled,ratio).
VerificationReport cmd_compare(const RunConfig& cfg);

/// Classical trajectory from H_c, closed-form d(t) and tracked packet positions;
/// writes `trajectory.csv` (t,x,p,d) and `peaks.csv` (t,peak,x,d).
VerificationReport cmd_trajectory(const RunConfig& cfg);

// Suites used by cmd_verify, exposed for reuse.
std::vector<CheckRecord> conjugation_suite(const RunConfig& cfg, std::vector<std::string>& notes);
std::vector<CheckRecord> residual_suite(const RunConfig& cfg);
std::vector<CheckRecord> decomposition_suite(const RunConfig& cfg);
std::vector<CheckRecord> invariance_suite(const RunConfig& cfg);
std::vector<CheckRecord> shift_suite(const RunConfig& cfg);
std::vector<CheckRecord> classical_suite(const RunConfig& cfg);

/// Position fiducial of a packet: the Airy main lobe (refined maximum of |psi|^2)
/// or, for the oscillator, the centroid, which stays unambiguous for n > 0.
/// Airy states are masked first so the periodic interpolant sees no edge jump.
double packet_position(const ScenarioSpec& spec, const WaveFunction& psi, const Window& window,
                       double mask_fraction);

/// Propagated states at each of `times` (non-decreasing, >= 0), starting from
/// the closed-form state at t = 0.
std::vector<WaveFunction> propagate_through(const ScenarioSpec& spec, const Grid& grid, const PropagatorConfig& prop,
                                            const std::vector<double>& times);

/// Trajectory from (d(0), m d'(0)) over [0, horizon] whose step divides the
/// horizon into a multiple of `peak_samples`, so that peak times are samples.
Trajectory correspondence_trajectory(const ScenarioSpec& spec, double horizon, double dt, int peak_samples);

}  // namespace nswp
