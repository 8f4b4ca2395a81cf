#include "nswp/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "nswp/drive.hpp"
#include "nswp/errors.hpp"
#include "nswp/special.hpp"

namespace nswp {

namespace {

constexpr double kTwoPi = 6.283185307179586;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    int line;
};

double parse_double(const std::string& key, const Entry& e) {
    double v = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ConfigError(key, e.line, "expected a number, got '" + e.value + "'");
    if (!std::isfinite(v)) throw ConfigError(key, e.line, "value must be finite");
    return v;
}

long long parse_integer(const std::string& key, const Entry& e) {
    long long v = 0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ConfigError(key, e.line, "expected an integer, got '" + e.value + "'");
    return v;
}

bool parse_bool(const std::string& key, const Entry& e) {
    if (e.value == "true") return true;
    if (e.value == "false") return false;
    throw ConfigError(key, e.line, "expected true or false, got '" + e.value + "'");
}

std::vector<double> parse_list(const std::string& key, const Entry& e) {
    std::vector<double> out;
    std::string_view rest = e.value;
    while (true) {
        const auto comma = rest.find(',');
        const std::string item(trim(rest.substr(0, comma)));
        if (item.empty()) throw ConfigError(key, e.line, "empty list element");
        out.push_back(parse_double(key, {item, e.line}));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

const std::set<std::string>& airy_keys() {
    static const std::set<std::string> keys{"b"};
    return keys;
}

const std::set<std::string>& drive_keys() {
    static const std::set<std::string> keys{"drive", "drive_F0", "drive_Omega", "drive_file"};
    return keys;
}

const std::set<std::string>& sho_keys() {
    static const std::set<std::string> keys{"n", "d0", "v0", "omega"};
    return keys;
}

void require(bool ok, const std::string& field, const std::string& message) {
    if (!ok) throw ConfigError(field, 0, message);
}

}  // namespace

RunConfig default_config(std::string_view scenario) {
    RunConfig cfg;
    if (scenario == "free-airy" || scenario == "linear-airy") {
        cfg.scenario = std::string(scenario);
        return cfg;
    }
    if (scenario == "sho") {
        cfg.scenario = "sho";
        cfg.grid_x_min = -20.0;
        cfg.grid_x_max = 20.0;
        cfg.window_lo = -12.0;
        cfg.window_hi = 12.0;
        cfg.horizon = kTwoPi;
        cfg.peak_samples = 16;
        return cfg;
    }
    throw ConfigError("scenario", 0, "unknown scenario '" + std::string(scenario) +
                                         "' (expected free-airy, linear-airy or sho)");
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    std::map<std::string, Entry> entries;
    int line_no = 0;
    std::string_view rest = text;
    while (!rest.empty()) {
        ++line_no;
        const auto nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("", line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError("", line_no, "missing key");
        if (value.empty()) throw ConfigError(key, line_no, "missing value");
        if (auto it = entries.find(key); it != entries.end()) {
            throw ConfigError(key, line_no, "duplicate key (first set on line " + std::to_string(it->second.line) + ")");
        }
        entries.emplace(key, Entry{value, line_no});
    }

    RunConfig cfg;
    if (auto it = entries.find("scenario"); it != entries.end()) {
        try {
            cfg = default_config(it->second.value);
        } catch (const ConfigError&) {
            throw ConfigError("scenario", it->second.line, "unknown scenario '" + it->second.value + "'");
        }
    }

    using Setter = std::function<void(const std::string&, const Entry&)>;
    auto num = [](double& dst) -> Setter { return [&dst](const std::string& k, const Entry& e) { dst = parse_double(k, e); }; };
    auto flag = [](bool& dst) -> Setter { return [&dst](const std::string& k, const Entry& e) { dst = parse_bool(k, e); }; };
    const std::map<std::string, Setter> setters{
        {"scenario", [](const std::string&, const Entry&) {}},
        {"hbar", num(cfg.hbar)},
        {"mass", num(cfg.mass)},
        {"b", num(cfg.b)},
        {"drive",
         [&](const std::string& k, const Entry& e) {
             if (e.value != "constant" && e.value != "cosine" && e.value != "tabulated") {
                 throw ConfigError(k, e.line, "expected constant, cosine or tabulated, got '" + e.value + "'");
             }
             cfg.drive = e.value;
         }},
        {"drive_F0", num(cfg.drive_f0)},
        {"drive_Omega", num(cfg.drive_omega)},
        {"drive_file",
         [&](const std::string&, const Entry& e) {
             std::filesystem::path p(e.value);
             cfg.drive_file = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
         }},
        {"n",
         [&](const std::string& k, const Entry& e) {
             const long long v = parse_integer(k, e);
             if (v < 0 || v > kMaxShoLevel) {
                 throw ConfigError(k, e.line, "level must be in [0, " + std::to_string(kMaxShoLevel) + "]");
             }
             cfg.n = static_cast<int>(v);
         }},
        {"d0", num(cfg.d0)},
        {"v0", num(cfg.v0)},
        {"omega", num(cfg.omega)},
        {"grid_x_min", num(cfg.grid_x_min)},
        {"grid_x_max", num(cfg.grid_x_max)},
        {"grid_n",
         [&](const std::string& k, const Entry& e) {
             const long long v = parse_integer(k, e);
             if (v <= 0) throw ConfigError(k, e.line, "must be positive");
             cfg.grid_n = static_cast<std::size_t>(v);
         }},
        {"window_lo", num(cfg.window_lo)},
        {"window_hi", num(cfg.window_hi)},
        {"horizon", num(cfg.horizon)},
        {"steps", num(cfg.steps)},
        {"mask_fraction", num(cfg.mask_fraction)},
        {"sample_times", [&](const std::string& k, const Entry& e) { cfg.sample_times = parse_list(k, e); }},
        {"trajectory_dt", num(cfg.trajectory_dt)},
        {"peak_samples",
         [&](const std::string& k, const Entry& e) {
             const long long v = parse_integer(k, e);
             if (v < 1 || v > 100000) throw ConfigError(k, e.line, "must be in [1, 100000]");
             cfg.peak_samples = static_cast<int>(v);
         }},
        {"shift_time", num(cfg.shift_time)},
        {"output_dir", [&](const std::string&, const Entry& e) { cfg.output_dir = e.value; }},
        {"check_conjugation", flag(cfg.check_conjugation)},
        {"check_residual", flag(cfg.check_residual)},
        {"check_decomposition", flag(cfg.check_decomposition)},
        {"check_invariance", flag(cfg.check_invariance)},
        {"check_shift", flag(cfg.check_shift)},
        {"check_classical", flag(cfg.check_classical)},
    };

    for (const auto& [key, entry] : entries) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError(key, entry.line, "unknown key");
        if (airy_keys().count(key) && !cfg.is_airy()) {
            throw ConfigError(key, entry.line, "not used by scenario " + cfg.scenario);
        }
        if (drive_keys().count(key) && cfg.scenario != "linear-airy") {
            throw ConfigError(key, entry.line, "not used by scenario " + cfg.scenario);
        }
        if (sho_keys().count(key) && cfg.is_airy()) {
            throw ConfigError(key, entry.line, "not used by scenario " + cfg.scenario);
        }
        it->second(key, entry);
    }

    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        const auto it = entries.find(e.field());
        if (it == entries.end() || e.line() > 0) throw;
        std::string message = e.what();
        message = message.substr(message.find(": ") + 2);
        throw ConfigError(e.field(), it->second.line, message);
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", 0, "cannot read config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.parent_path());
}

void validate(const RunConfig& cfg) {
    (void)default_config(cfg.scenario);
    require(cfg.hbar > 0.0 && std::isfinite(cfg.hbar), "hbar", "must be finite and > 0");
    require(cfg.mass > 0.0 && std::isfinite(cfg.mass), "mass", "must be finite and > 0");
    if (cfg.is_airy()) {
        require(cfg.b != 0.0 && std::isfinite(cfg.b), "b", "must be finite and nonzero");
    } else {
        require(cfg.n >= 0 && cfg.n <= kMaxShoLevel, "n", "level out of range");
        require(std::isfinite(cfg.d0), "d0", "must be finite");
        require(std::isfinite(cfg.v0), "v0", "must be finite");
        require(cfg.omega > 0.0 && std::isfinite(cfg.omega), "omega", "must be finite and > 0");
    }
    if (cfg.scenario == "linear-airy") {
        require(cfg.drive == "constant" || cfg.drive == "cosine" || cfg.drive == "tabulated", "drive",
                "expected constant, cosine or tabulated");
        require(std::isfinite(cfg.drive_f0), "drive_F0", "must be finite");
        if (cfg.drive == "cosine") {
            require(cfg.drive_omega != 0.0 && std::isfinite(cfg.drive_omega), "drive_Omega", "must be finite and nonzero");
        }
        if (cfg.drive == "tabulated") require(!cfg.drive_file.empty(), "drive_file", "required for a tabulated drive");
    }

    require(std::isfinite(cfg.grid_x_min), "grid_x_min", "must be finite");
    require(std::isfinite(cfg.grid_x_max) && cfg.grid_x_max > cfg.grid_x_min, "grid_x_max",
            "must be finite and greater than grid_x_min");
    require(cfg.grid_n >= 256 && (cfg.grid_n & (cfg.grid_n - 1)) == 0, "grid_n", "must be a power of two >= 256");
    require(cfg.mask_fraction >= 0.0 && cfg.mask_fraction <= 0.25, "mask_fraction", "must be in [0, 0.25]");
    const double margin = cfg.mask_fraction * (cfg.grid_x_max - cfg.grid_x_min);
    require(std::isfinite(cfg.window_lo) && cfg.window_lo >= cfg.grid_x_min + margin, "window_lo",
            "must lie inside the grid, clear of the absorbing mask");
    require(std::isfinite(cfg.window_hi) && cfg.window_hi > cfg.window_lo, "window_hi", "must exceed window_lo");
    require(cfg.window_hi <= cfg.grid_x_max - margin, "window_hi",
            "must lie inside the grid, clear of the absorbing mask");

    require(cfg.horizon > 0.0 && std::isfinite(cfg.horizon), "horizon", "must be finite and > 0");
    require(cfg.steps >= 1.0 && std::isfinite(cfg.steps), "steps", "must be >= 1");
    require(!cfg.sample_times.empty(), "sample_times", "must not be empty");
    for (std::size_t i = 0; i < cfg.sample_times.size(); ++i) {
        const double t = cfg.sample_times[i];
        require(t >= 0.0 && t <= cfg.horizon, "sample_times", "every time must lie in [0, horizon]");
        require(i == 0 || t > cfg.sample_times[i - 1], "sample_times", "must be strictly increasing");
    }
    require(cfg.trajectory_dt > 0.0 && cfg.trajectory_dt <= cfg.horizon, "trajectory_dt", "must be in (0, horizon]");
    require(cfg.peak_samples >= 1, "peak_samples", "must be >= 1");
    require(cfg.shift_time >= 0.0 && cfg.shift_time <= cfg.horizon, "shift_time", "must lie in [0, horizon]");
    require(!cfg.output_dir.empty(), "output_dir", "must not be empty");

    if (cfg.scenario == "linear-airy" && cfg.drive == "tabulated") {
        std::optional<TabulatedDrive> drive;
        try {
            drive.emplace(load_drive_csv(cfg.drive_file));
        } catch (const ConfigError& e) {
            throw ConfigError("drive_file", 0, cfg.drive_file.string() + ": " + e.what());
        } catch (const std::exception& e) {
            throw ConfigError("drive_file", 0, e.what());
        }
        require(cfg.horizon <= drive->t_end(), "horizon", "exceeds the tabulated drive range");
    }
}

std::string to_text(const RunConfig& cfg) {
    std::ostringstream out;
    auto put = [&](const char* key, const std::string& value) { out << key << " = " << value << '\n'; };
    auto num = [&](const char* key, double v) { put(key, format_double(v)); };
    auto flag = [&](const char* key, bool v) { put(key, v ? "true" : "false"); };

    put("scenario", cfg.scenario);
    num("hbar", cfg.hbar);
    num("mass", cfg.mass);
    if (cfg.is_airy()) num("b", cfg.b);
    if (cfg.scenario == "linear-airy") {
        put("drive", cfg.drive);
        num("drive_F0", cfg.drive_f0);
        num("drive_Omega", cfg.drive_omega);
        if (cfg.drive == "tabulated") put("drive_file", cfg.drive_file.string());
    }
    if (!cfg.is_airy()) {
        put("n", std::to_string(cfg.n));
        num("d0", cfg.d0);
        num("v0", cfg.v0);
        num("omega", cfg.omega);
    }
    num("grid_x_min", cfg.grid_x_min);
    num("grid_x_max", cfg.grid_x_max);
    put("grid_n", std::to_string(cfg.grid_n));
    num("window_lo", cfg.window_lo);
    num("window_hi", cfg.window_hi);
    num("horizon", cfg.horizon);
    num("steps", cfg.steps);
    num("mask_fraction", cfg.mask_fraction);
    std::string times;
    for (std::size_t i = 0; i < cfg.sample_times.size(); ++i) {
        if (i) times += ", ";
        times += format_double(cfg.sample_times[i]);
    }
    put("sample_times", times);
    num("trajectory_dt", cfg.trajectory_dt);
    put("peak_samples", std::to_string(cfg.peak_samples));
    num("shift_time", cfg.shift_time);
    put("output_dir", cfg.output_dir.string());
    flag("check_conjugation", cfg.check_conjugation);
    flag("check_residual", cfg.check_residual);
    flag("check_decomposition", cfg.check_decomposition);
    flag("check_invariance", cfg.check_invariance);
    flag("check_shift", cfg.check_shift);
    flag("check_classical", cfg.check_classical);
    return out.str();
}

ScenarioSpec build_scenario(const RunConfig& cfg) {
    const PhysicalParams params{cfg.hbar, cfg.mass};
    if (cfg.scenario == "free-airy") return ScenarioSpec(FreeAiry{cfg.b}, params);
    if (cfg.scenario == "sho") return ScenarioSpec(ShoDisplaced{cfg.n, cfg.d0, cfg.v0, cfg.omega}, params);
    if (cfg.drive == "constant") return ScenarioSpec(LinearAiry{cfg.b, ConstantDrive{cfg.drive_f0}}, params);
    if (cfg.drive == "cosine") return ScenarioSpec(LinearAiry{cfg.b, CosineDrive{cfg.drive_f0, cfg.drive_omega}}, params);
    return ScenarioSpec(LinearAiry{cfg.b, load_drive_csv(cfg.drive_file)}, params);
}

Grid build_grid(const RunConfig& cfg) { return Grid(cfg.grid_x_min, cfg.grid_x_max, cfg.grid_n); }

Window build_window(const RunConfig& cfg) { return Window{cfg.window_lo, cfg.window_hi}; }

PropagatorConfig build_propagator(const RunConfig& cfg) { return PropagatorConfig{cfg.steps, cfg.mask_fraction}; }

}  // namespace nswp
