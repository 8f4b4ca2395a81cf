#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "nswp/config.hpp"
#include "nswp/errors.hpp"

using namespace nswp;

namespace {

ConfigError parse_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e;
    }
    FAIL("expected ConfigError for: " << text);
    return ConfigError("", 0, "");
}

}  // namespace

TEST_CASE("scenario defaults") {
    const RunConfig airy = parse_config("scenario = free-airy\n");
    CHECK(airy.grid_n == 8192);
    CHECK(airy.window_lo == -25.0);
    CHECK(airy.steps == 4096.0);
    const RunConfig sho = parse_config("# oscillator\nscenario = sho   # trailing comment\n");
    CHECK(sho.grid_x_min == -20.0);
    CHECK(sho.horizon == doctest::Approx(6.283185307179586));
    CHECK(parse_config("").scenario == "free-airy");
    CHECK_THROWS_AS(default_config("harmonic"), ConfigError);
}

TEST_CASE("values are parsed and round-trip through the canonical text") {
    const std::string text =
        "scenario = linear-airy\n"
        "b = 1.25\n"
        "drive = constant\n"
        "drive_F0 = -0.3\n"
        "grid_n = 4096\n"
        "sample_times = 0, 0.25,1\n"
        "check_shift = false\n"
        "output_dir = runs/a b\n";
    const RunConfig cfg = parse_config(text);
    CHECK(cfg.b == 1.25);
    CHECK(cfg.drive == "constant");
    CHECK(cfg.drive_f0 == -0.3);
    CHECK(cfg.grid_n == 4096);
    CHECK(cfg.sample_times == std::vector<double>{0.0, 0.25, 1.0});
    CHECK_FALSE(cfg.check_shift);
    CHECK(cfg.output_dir == "runs/a b");
    CHECK(to_text(parse_config(to_text(cfg))) == to_text(cfg));
    const RunConfig sho = default_config("sho");
    CHECK(to_text(parse_config(to_text(sho))) == to_text(sho));
}

TEST_CASE("errors carry line and field") {
    ConfigError e = parse_error("scenario = sho\n\nomega = fast\n");
    CHECK(e.line() == 3);
    CHECK(e.field() == "omega");

    e = parse_error("hbar = 1\nmass = 1\nhbar = 2\n");
    CHECK(e.line() == 3);
    CHECK(e.field() == "hbar");

    e = parse_error("scenario = free-airy\nspeed = 3\n");
    CHECK(e.field() == "speed");

    e = parse_error("scenario = free-airy\nn = 3\n");
    CHECK(e.field() == "n");

    e = parse_error("just words\n");
    CHECK(e.line() == 1);

    e = parse_error("scenario = free-airy\nwindow_hi = 39\n");
    CHECK(e.field() == "window_hi");
    CHECK(e.line() == 2);

    e = parse_error("grid_n = 1000\n");
    CHECK(e.field() == "grid_n");

    e = parse_error("sample_times = 0, 2, 1\n");
    CHECK(e.field() == "sample_times");

    e = parse_error("horizon = 0\n");
    CHECK(e.field() == "horizon");

    e = parse_error("check_residual = yes\n");
    CHECK(e.field() == "check_residual");

    e = parse_error("scenario = linear-airy\ndrive = tabulated\n");
    CHECK(e.field() == "drive_file");

    e = parse_error("scenario = sho\nn = 61\n");
    CHECK(e.field() == "n");

    e = parse_error("scenario = free-airy\nhbar = nan\n");
    CHECK(e.field() == "hbar");
}

TEST_CASE("tabulated drive files resolve against the config directory") {
    const auto dir = std::filesystem::temp_directory_path() / "nswp_config_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream csv(dir / "force.csv");
        csv << "t,F\n";
        for (int i = 0; i <= 400; ++i) csv << i * 0.01 << ",0.2\n";
    }
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "scenario = linear-airy\ndrive = tabulated\ndrive_file = force.csv\nhorizon = 3\n";
    }
    const RunConfig cfg = load_config(dir / "run.cfg");
    CHECK(cfg.drive_file == dir / "force.csv");
    const ScenarioSpec spec = build_scenario(cfg);
    CHECK(spec.linear().drive.is_tabulated());

    {
        std::ofstream cfg(dir / "long.cfg");
        cfg << "scenario = linear-airy\ndrive = tabulated\ndrive_file = force.csv\nhorizon = 5\n";
    }
    CHECK_THROWS_AS(load_config(dir / "long.cfg"), ConfigError);
    CHECK_THROWS_AS(load_config(dir / "missing.cfg"), ConfigError);
}

TEST_CASE("builders") {
    const RunConfig cfg = default_config("sho");
    const ScenarioSpec spec = build_scenario(cfg);
    CHECK(spec.sho().n == cfg.n);
    CHECK(build_grid(cfg).size() == cfg.grid_n);
    CHECK(build_window(cfg).hi == cfg.window_hi);
    CHECK(build_propagator(cfg).mask_fraction == cfg.mask_fraction);
}
