#pragma once

// Pass/fail records emitted by the CLI commands, serialized as JSON.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nswp/config.hpp"

namespace nswp {

struct CheckRecord {
    std::string name;
    std::string scenario;
    std::vector<std::pair<std::string, double>> parameters;
    double value = 0.0;
    /// Inclusive bounds on value; at least one is set. NaN values never pass.
    std::optional<double> lower;
    std::optional<double> upper;
    bool pass = false;
    std::string note;
};

/// value <= tolerance.
CheckRecord at_most(std::string name, std::string scenario, double value, double tolerance,
                    std::vector<std::pair<std::string, double>> parameters = {}, std::string note = {});

/// value >= bound.
CheckRecord at_least(std::string name, std::string scenario, double value, double bound,
                     std::vector<std::pair<std::string, double>> parameters = {}, std::string note = {});

/// lo <= value <= hi.
CheckRecord within(std::string name, std::string scenario, double value, double lo, double hi,
                   std::vector<std::pair<std::string, double>> parameters = {}, std::string note = {});

struct VerificationReport {
    std::string command;
    RunConfig config;
    std::vector<CheckRecord> checks;
    std::vector<std::string> notes;
    /// Named numeric arrays (snapshot times, peak positions, ...).
    std::vector<std::pair<std::string, std::vector<double>>> series;

    bool all_pass() const;

    /// Deterministic for a fixed config: no timestamps, no host data.
    std::string to_json() const;

    /// One line per check: PASS/FAIL, name, value and bound.
    std::string summary() const;
};

void write_text_file(const std::filesystem::path& path, const std::string& text);

/// `<command>.metadata.json` with the wall-clock timestamp and tool version, kept apart
/// from the deterministic report.
void write_metadata(const std::filesystem::path& dir, const std::string& command);

}  // namespace nswp
