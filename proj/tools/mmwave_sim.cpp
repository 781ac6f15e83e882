// mmwave-sim: Monte Carlo coverage / ASE sweeps for ceiling-mounted mmWave APs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mmw/config.hpp"
#include "mmw/csv.hpp"
#include "mmw/engine.hpp"
#include "mmw/error.hpp"
#include "mmw/svg.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mmw::IoError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

int fail(const std::string& message)
{
    std::cerr << "mmwave-sim: error: " << message << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monte Carlo coverage and area spectral efficiency of indoor mmWave networks "
                 "with ceiling-mounted fixed-beam APs.\n"
                 "Writes one CSV row per (d_s, theta_bw, threshold, scenario, association)."};
    app.set_help_flag("-h,--help", "Print this help and exit");

    std::string config_path;
    std::string out_path;
    std::string plot_mode;
    std::string plot_out;
    app.add_option("--config", config_path, "Config file of `key = value` lines (# comments)")
        ->option_text("PATH");
    app.add_option("--out", out_path, "CSV output path (default: standard output)")
        ->option_text("PATH");
    auto* plot = app.add_option("--plot", plot_mode, "Figure to render: coverage | ase | tradeoff")
                     ->option_text("MODE");
    auto* plot_path = app.add_option("--plot-out", plot_out, "SVG output path for --plot")
                          ->option_text("PATH");
    plot->needs(plot_path);
    plot_path->needs(plot);

    std::map<std::string, std::string> overrides;
    for (const mmw::ConfigKeyInfo& info : mmw::config_keys()) {
        const std::string key(info.key);
        app.add_option_function<std::string>(
               "--" + key, [&overrides, key](const std::string& v) { overrides[key] = v; },
               std::string(info.help) + " [default: " + std::string(info.default_value) + "]")
            ->option_text("VALUE");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(std::string(e.what()) + " (see --help)");
    }

    try {
        mmw::ConfigEntries entries;
        if (!config_path.empty()) {
            try {
                entries = mmw::parse_config_entries(read_file(config_path));
            } catch (const mmw::ParseError& e) {
                return fail(config_path + ": " + e.what());
            }
        }
        for (const auto& [key, value] : overrides) entries[key] = mmw::ConfigEntry{value, 0};

        const mmw::SimulationConfig config = mmw::build_config(entries);
        const std::optional<mmw::PlotMode> mode =
            plot_mode.empty() ? std::nullopt : std::optional(mmw::parse_plot_mode(plot_mode));

        const mmw::SweepResult result = mmw::run_sweep(config.run, config.scenarios);

        if (out_path.empty()) {
            mmw::write_csv(result, std::cout);
            std::cout.flush();
            if (!std::cout) throw mmw::IoError("failed writing CSV to standard output");
        } else {
            mmw::emit_csv(result, out_path);
        }
        if (mode) mmw::render_svg(result, *mode, plot_out);
    } catch (const mmw::ParseError& e) {
        if (e.line() == 0) {
            const std::string what = e.what();
            return fail("command-line override --" + what.substr(what.find(": ") + 2));
        }
        return fail(e.what());
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return 0;
}
