#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmw/engine.hpp"
#include "mmw/scenario.hpp"

namespace mmw {

/// Everything a run needs: one physical setup per requested scenario plus the sweep grid.
struct SimulationConfig {
    std::vector<ScenarioConfig> scenarios;
    RunSpec run;
};

/// Raw `key = value` pairs with the line each came from (0 for overrides).
struct ConfigEntry {
    std::string value;
    std::size_t line = 0;
};
using ConfigEntries = std::map<std::string, ConfigEntry, std::less<>>;

struct ConfigKeyInfo {
    std::string_view key;
    std::string_view default_value;
    std::string_view help;
};

/// Every recognised key with its default and a one-line description.
std::span<const ConfigKeyInfo> config_keys();

/// Splits config text into entries. `#` starts a comment; blank lines are
/// ignored. Throws ParseError for malformed lines, unknown or repeated keys.
ConfigEntries parse_config_entries(std::string_view text);

/// Converts entries to a validated configuration; missing keys take their
/// defaults. Throws ParseError for unparsable values and ValidationError for
/// out-of-range ones.
SimulationConfig build_config(const ConfigEntries& entries);

SimulationConfig parse_config_text(std::string_view text);
SimulationConfig parse_config(const std::filesystem::path& path);

/// Parses a comma-separated list whose items are numbers or inclusive
/// `start:step:stop` ranges.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace mmw
