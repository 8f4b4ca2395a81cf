#pragma once

// Flat `key = value` run description. One file fully determines a run.
//
//   # comment
//   scenario      = free-airy | linear-airy | sho
//   hbar, mass    physical constants (> 0)
//   b             Airy scale (!= 0), Airy scenarios only
//   drive         constant | cosine | tabulated, linear-airy only
//   drive_F0, drive_Omega, drive_file
//   n, d0, v0, omega     oscillator level and initial kinematics, sho only
//   grid_x_min, grid_x_max, grid_n
//   window_lo, window_hi
//   horizon       propagation / trajectory horizon (> 0)
//   steps         split-step steps per unit time
//   mask_fraction
//   sample_times  comma-separated times in [0, horizon], strictly increasing
//   trajectory_dt, peak_samples, shift_time
//   output_dir
//   check_conjugation, check_residual, check_decomposition,
//   check_invariance, check_shift, check_classical   (true | false)
//
// Defaults depend on the scenario, which is read first. Keys that do not apply
// to the chosen scenario, unknown keys, duplicates and malformed values are
// rejected with the offending line and field.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nswp/grid.hpp"
#include "nswp/numerics.hpp"
#include "nswp/scenarios.hpp"

namespace nswp {

struct RunConfig {
    std::string scenario = "free-airy";
    double hbar = 1.0;
    double mass = 1.0;

    double b = 1.0;
    std::string drive = "cosine";
    double drive_f0 = 0.5;
    double drive_omega = 2.0;
    std::filesystem::path drive_file;

    int n = 2;
    double d0 = 2.0;
    double v0 = 1.0;
    double omega = 1.0;

    double grid_x_min = -120.0;
    double grid_x_max = 40.0;
    std::size_t grid_n = 8192;
    double window_lo = -25.0;
    double window_hi = 8.0;

    double horizon = 3.0;
    double steps = 4096.0;
    double mask_fraction = 0.1;
    std::vector<double> sample_times{0.0, 0.5, 1.0, 1.5, 2.0};
    double trajectory_dt = 1e-3;
    int peak_samples = 12;
    double shift_time = 1.0;

    std::filesystem::path output_dir = "nswp-out";

    bool check_conjugation = true;
    bool check_residual = true;
    bool check_decomposition = true;
    bool check_invariance = true;
    bool check_shift = true;
    bool check_classical = true;

    bool is_airy() const { return scenario != "sho"; }
};

/// Defaults for "free-airy", "linear-airy" or "sho"; ConfigError otherwise.
RunConfig default_config(std::string_view scenario);

/// Parses and validates. Relative drive_file paths resolve against base_dir.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

RunConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError naming the first invalid field.
void validate(const RunConfig& cfg);

/// Canonical text form; parse_config(to_text(c)) reproduces c.
std::string to_text(const RunConfig& cfg);

ScenarioSpec build_scenario(const RunConfig& cfg);
Grid build_grid(const RunConfig& cfg);
Window build_window(const RunConfig& cfg);
PropagatorConfig build_propagator(const RunConfig& cfg);

}  // namespace nswp
