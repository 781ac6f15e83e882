#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mmw/metrics.hpp"

namespace mmw {

enum class PlotMode {
    CoverageVsDs,  // coverage against d_s, one curve per beamwidth
    AseVsDs,       // ASE (log axis) against d_s, one curve per beamwidth
    Tradeoff,      // peak coverage against its ASE, one curve per scenario
};

PlotMode parse_plot_mode(std::string_view text);  // "coverage" | "ase" | "tradeoff"
std::string_view to_string(PlotMode mode);

/// Standalone SVG document for the requested figure. Curves beyond the
/// varying parameter (threshold, scenario, association) get their own
/// polyline and legend entry. Throws DomainError if nothing can be plotted.
std::string render_svg(const SweepResult& result, PlotMode mode);
void render_svg(const SweepResult& result, PlotMode mode, const std::filesystem::path& path);

}  // namespace mmw
