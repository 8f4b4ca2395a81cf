// nswp: batch front end for the nonspreading-packet verification library.
//
//   nswp verify     --scenario sho --out runs/sho
//   nswp compare    --config my.cfg
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 for
// configuration errors, 3 for any other failure.

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "nswp/commands.hpp"
#include "nswp/config.hpp"
#include "nswp/errors.hpp"
#include "nswp/version.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string scenario;
    std::string out;
    bool seedless = false;
    bool print_config = false;
};

using Command = std::function<nswp::VerificationReport(const nswp::RunConfig&)>;

int run(const Options& opt, const Command& command) {
    nswp::RunConfig cfg;
    try {
        cfg = opt.config_path.empty() ? nswp::default_config(opt.scenario.empty() ? "free-airy" : opt.scenario)
                                      : nswp::load_config(opt.config_path);
        if (!opt.out.empty()) cfg.output_dir = opt.out;
        nswp::validate(cfg);
    } catch (const nswp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    if (opt.print_config) {
        std::cout << nswp::to_text(cfg);
        return 0;
    }
    try {
        const nswp::VerificationReport report = command(cfg);
        std::cout << report.summary();
        std::cout << (report.all_pass() ? "all checks passed" : "some checks FAILED") << " (" << report.checks.size()
                  << " checks, output in " << cfg.output_dir.string() << ")\n";
        return report.all_pass() ? 0 : 1;
    } catch (const nswp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonspreading wave packets: operator algebra, propagation and classical correspondence checks"};
    app.set_version_flag("--version", std::string(nswp::kVersion));
    app.require_subcommand(1);

    const std::map<std::string, std::pair<std::string, Command>> commands{
        {"verify", {"Run the verification suites and write verify.json", nswp::cmd_verify}},
        {"evolve", {"Propagate under H(t) and write wavefunction snapshots", nswp::cmd_evolve}},
        {"compare", {"Propagated vs closed-form error time series", nswp::cmd_compare}},
        {"trajectory", {"Classical trajectory from H_c vs d(t) and tracked peaks", nswp::cmd_trajectory}},
    };

    Options opt;
    std::map<CLI::App*, Command> handlers;
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        auto* config = sub->add_option("--config", opt.config_path, "Run configuration file")->check(CLI::ExistingFile);
        sub->add_option("--scenario", opt.scenario, "Use the default configuration of a scenario")
            ->check(CLI::IsMember({"free-airy", "linear-airy", "sho"}))
            ->excludes(config);
        sub->add_option("--out", opt.out, "Output directory (overrides output_dir)");
        sub->add_flag("--seedless", opt.seedless, "Deterministic mode; accepted for compatibility, always on");
        sub->add_flag("--print-config", opt.print_config, "Print the resolved configuration and exit");
        handlers[sub] = entry.second;
    }

    CLI11_PARSE(app, argc, argv);

    for (const auto& [sub, handler] : handlers) {
        if (sub->parsed()) return run(opt, handler);
    }
    return 3;
}
