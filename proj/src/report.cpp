#include "nswp/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "nswp/version.hpp"

namespace nswp {

namespace {

using nlohmann::ordered_json;

CheckRecord make(std::string name, std::string scenario, double value, std::optional<double> lo,
                 std::optional<double> hi, std::vector<std::pair<std::string, double>> parameters, std::string note) {
    CheckRecord r;
    r.name = std::move(name);
    r.scenario = std::move(scenario);
    r.parameters = std::move(parameters);
    r.value = value;
    r.lower = lo;
    r.upper = hi;
    r.note = std::move(note);
    r.pass = !std::isnan(value) && (!lo || value >= *lo) && (!hi || value <= *hi);
    return r;
}

ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? ordered_json("nan") : ordered_json(v > 0 ? "inf" : "-inf");
}

}  // namespace

CheckRecord at_most(std::string name, std::string scenario, double value, double tolerance,
                    std::vector<std::pair<std::string, double>> parameters, std::string note) {
    return make(std::move(name), std::move(scenario), value, std::nullopt, tolerance, std::move(parameters),
                std::move(note));
}

CheckRecord at_least(std::string name, std::string scenario, double value, double bound,
                     std::vector<std::pair<std::string, double>> parameters, std::string note) {
    return make(std::move(name), std::move(scenario), value, bound, std::nullopt, std::move(parameters),
                std::move(note));
}

CheckRecord within(std::string name, std::string scenario, double value, double lo, double hi,
                   std::vector<std::pair<std::string, double>> parameters, std::string note) {
    return make(std::move(name), std::move(scenario), value, lo, hi, std::move(parameters), std::move(note));
}

bool VerificationReport::all_pass() const {
    for (const CheckRecord& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::string VerificationReport::to_json() const {
    ordered_json env;
    env["scenario"] = config.scenario;
    env["hbar"] = config.hbar;
    env["mass"] = config.mass;
    env["grid"] = {{"x_min", config.grid_x_min}, {"x_max", config.grid_x_max}, {"n", config.grid_n}};
    env["window"] = {{"lo", config.window_lo}, {"hi", config.window_hi}};
    env["steps_per_unit_time"] = config.steps;
    env["mask_fraction"] = config.mask_fraction;
    env["horizon"] = config.horizon;
    env["version"] = kVersion;

    ordered_json checks_json = ordered_json::array();
    for (const CheckRecord& c : checks) {
        ordered_json j;
        j["name"] = c.name;
        j["scenario"] = c.scenario;
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : c.parameters) params[k] = number(v);
        j["parameters"] = params;
        j["value"] = number(c.value);
        if (c.lower) j["lower_bound"] = *c.lower;
        if (c.upper) j["tolerance"] = *c.upper;
        j["pass"] = c.pass;
        if (!c.note.empty()) j["note"] = c.note;
        checks_json.push_back(std::move(j));
    }

    ordered_json root;
    root["command"] = command;
    root["environment"] = env;
    root["config"] = to_text(config);
    root["checks"] = checks_json;
    root["notes"] = notes;
    ordered_json series_json = ordered_json::object();
    for (const auto& [name, values] : series) {
        ordered_json arr = ordered_json::array();
        for (double v : values) arr.push_back(number(v));
        series_json[name] = arr;
    }
    root["series"] = series_json;
    root["all_pass"] = all_pass();
    return root.dump(2) + "\n";
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    char line[256];
    for (const CheckRecord& c : checks) {
        std::string bound;
        if (c.lower && c.upper) {
            std::snprintf(line, sizeof line, "in [%.3g, %.3g]", *c.lower, *c.upper);
            bound = line;
        } else if (c.upper) {
            std::snprintf(line, sizeof line, "<= %.3g", *c.upper);
            bound = line;
        } else if (c.lower) {
            std::snprintf(line, sizeof line, ">= %.3g", *c.lower);
            bound = line;
        }
        std::snprintf(line, sizeof line, "%s  %-48s %.6e  %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                      bound.c_str());
        out << line;
    }
    for (const std::string& n : notes) out << "note: " << n << '\n';
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

void write_metadata(const std::filesystem::path& dir, const std::string& command) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    ordered_json j;
    j["command"] = command;
    j["timestamp"] = stamp;
    j["version"] = kVersion;
    write_text_file(dir / (command + ".metadata.json"), j.dump(2) + "\n");
}

}  // namespace nswp
