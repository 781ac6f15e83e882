#include "mmw/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mmw {

namespace {

constexpr std::array<ConfigKeyInfo, 21> kKeys{{
    {"d_s", "6.8", "inter-site distances in m (list or start:step:stop)"},
    {"theta_bw", "41", "main-lobe beamwidths in degrees (list or range)"},
    {"threshold", "-5", "SINR thresholds in dB (list or range)"},
    {"association", "min-dist", "association policies: min-dist, max-power"},
    {"scenario", "hand", "blockage scenarios: hand, pocket"},
    {"realizations", "20000", "Monte Carlo realizations per sweep cell"},
    {"seed", "1", "master seed (64-bit unsigned)"},
    {"ap_height", "10", "AP height above the UE plane in m"},
    {"area_side", "400", "side of the square venue in m"},
    {"body_width", "0.4", "body width in m"},
    {"dist_top_head", "0.4", "device to top-of-head distance in m"},
    {"hand_dist_to_body", "0.3", "device to body distance in the hand scenario, m"},
    {"pocket_dist_to_body", "0", "device to body distance in the pocket scenario, m"},
    {"body_attenuation_db", "-40", "body penetration loss in dB (<= 0)"},
    {"tx_power_dbm", "20", "AP transmit power in dBm"},
    {"carrier_freq_ghz", "60", "carrier frequency in GHz"},
    {"bandwidth_mhz", "100", "bandwidth in MHz"},
    {"noise_figure_db", "9", "UE noise figure in dB"},
    {"pathloss_exponent", "2", "path-loss exponent"},
    {"side_lobe_gain_db", "-10", "side-lobe gain in dB (< 0)"},
    {"min_beamwidth_deg", "1", "smallest accepted beamwidth in degrees"},
}};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_number(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value))
        throw std::invalid_argument("'" + std::string(text) + "' is not a number");
    return value;
}

std::uint64_t parse_unsigned(std::string_view text)
{
    text = trim(text);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument("'" + std::string(text) + "' is not a non-negative integer");
    return value;
}

bool is_known_key(std::string_view key)
{
    return std::any_of(kKeys.begin(), kKeys.end(),
                       [&](const ConfigKeyInfo& info) { return info.key == key; });
}

// Looks up a key's raw value, falling back to its default.
class EntryReader {
public:
    explicit EntryReader(const ConfigEntries& entries) : entries_(entries) {}

    std::pair<std::string_view, std::size_t> raw(std::string_view key) const
    {
        if (auto it = entries_.find(key); it != entries_.end()) return {it->second.value, it->second.line};
        for (const ConfigKeyInfo& info : kKeys) {
            if (info.key == key) return {info.default_value, 0};
        }
        throw std::logic_error("unregistered config key " + std::string(key));
    }

    template <typename Parse>
    auto parsed(std::string_view key, Parse parse) const
    {
        const auto [value, line] = raw(key);
        try {
            return parse(value);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, std::string(key) + ": " + e.what());
        } catch (const DomainError& e) {
            throw ParseError(line, std::string(key) + ": " + e.what());
        }
    }

    double number(std::string_view key) const { return parsed(key, parse_number); }
    std::vector<double> numbers(std::string_view key) const { return parsed(key, parse_number_list); }

private:
    const ConfigEntries& entries_;
};

void check(bool ok, std::string_view key, const std::string& message)
{
    if (!ok) throw ValidationError(std::string(key), message);
}

}  // namespace

std::span<const ConfigKeyInfo> config_keys()
{
    return kKeys;
}

std::vector<double> parse_number_list(std::string_view text)
{
    std::vector<double> values;
    for (std::string_view item : split(text, ',')) {
        if (item.empty()) throw std::invalid_argument("empty list item");
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            values.push_back(parse_number(item));
            continue;
        }
        if (parts.size() != 3)
            throw std::invalid_argument("range '" + std::string(item) + "' must be start:step:stop");
        const double start = parse_number(parts[0]);
        const double step = parse_number(parts[1]);
        const double stop = parse_number(parts[2]);
        if (step <= 0.0) throw std::invalid_argument("range step must be positive");
        if (stop < start) throw std::invalid_argument("range stop must not be below start");
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 1'000'000) throw std::invalid_argument("range has too many points");
        for (std::size_t i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
    }
    return values;
}

ConfigEntries parse_config_entries(std::string_view text)
{
    ConfigEntries entries;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "missing key before '='");
        if (value.empty()) throw ParseError(line_no, "missing value for '" + std::string(key) + "'");
        if (!is_known_key(key)) throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        if (entries.contains(key)) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
        entries.emplace(std::string(key), ConfigEntry{std::string(value), line_no});
    }
    return entries;
}

SimulationConfig build_config(const ConfigEntries& entries)
{
    for (const auto& [key, entry] : entries) {
        if (!is_known_key(key)) throw ParseError(entry.line, "unknown key '" + key + "'");
    }
    const EntryReader in(entries);
    SimulationConfig config;

    // sweep grid
    RunSpec& run = config.run;
    run.d_s_m = in.numbers("d_s");
    const std::vector<double> theta_deg = in.numbers("theta_bw");
    run.threshold_db = in.numbers("threshold");
    run.policies = in.parsed("association", [](std::string_view v) {
        std::vector<AssociationPolicy> out;
        for (std::string_view item : split(v, ',')) out.push_back(parse_association_policy(item));
        return out;
    });
    const std::vector<Scenario> scenarios = in.parsed("scenario", [](std::string_view v) {
        std::vector<Scenario> out;
        for (std::string_view item : split(v, ',')) out.push_back(parse_scenario(item));
        return out;
    });
    run.realizations = in.parsed("realizations", parse_unsigned);
    run.master_seed = in.parsed("seed", parse_unsigned);

    // physical setup shared by all scenarios
    ScenarioConfig base;
    base.ap_height_m = in.number("ap_height");
    base.area_side_m = in.number("area_side");
    base.body_width_m = in.number("body_width");
    base.dist_top_head_m = in.number("dist_top_head");
    base.body_attenuation_db = in.number("body_attenuation_db");
    base.tx_power_dbm = in.number("tx_power_dbm");
    base.carrier_freq_hz = in.number("carrier_freq_ghz") * 1e9;
    base.bandwidth_hz = in.number("bandwidth_mhz") * 1e6;
    base.noise_figure_db = in.number("noise_figure_db");
    base.pathloss_exponent = in.number("pathloss_exponent");
    base.side_lobe_gain_db = in.number("side_lobe_gain_db");
    const double min_beamwidth_deg = in.number("min_beamwidth_deg");
    base.min_beamwidth_rad = deg_to_rad(min_beamwidth_deg);
    const double hand_dist = in.number("hand_dist_to_body");
    const double pocket_dist = in.number("pocket_dist_to_body");

    check(!run.d_s_m.empty(), "d_s", "needs at least one value");
    for (double d : run.d_s_m) check(d > 0.0, "d_s", "inter-site distances must be positive");
    check(base.area_side_m > 0.0, "area_side", "must be positive");
    for (double d : run.d_s_m)
        check(d <= base.area_side_m, "d_s", "inter-site distance exceeds the venue side");
    check(min_beamwidth_deg > 0.0 && min_beamwidth_deg < 180.0, "min_beamwidth_deg",
          "must lie in (0, 180)");
    for (double t : theta_deg) {
        check(t > 0.0 && t < 180.0, "theta_bw", "beamwidths must lie in (0, 180) degrees");
        check(t >= min_beamwidth_deg, "theta_bw", "beamwidth below min_beamwidth_deg");
    }
    check(run.realizations >= 1, "realizations", "must be at least 1");
    check(base.ap_height_m > 0.0, "ap_height", "must be positive");
    check(base.body_width_m > 0.0, "body_width", "must be positive");
    check(base.dist_top_head_m > 0.0, "dist_top_head", "must be positive");
    check(hand_dist >= 0.0, "hand_dist_to_body", "must be non-negative");
    check(pocket_dist >= 0.0, "pocket_dist_to_body", "must be non-negative");
    check(base.body_attenuation_db <= 0.0, "body_attenuation_db", "must be <= 0 dB");
    check(base.carrier_freq_hz > 0.0, "carrier_freq_ghz", "must be positive");
    check(base.bandwidth_hz > 0.0, "bandwidth_mhz", "must be positive");
    check(base.pathloss_exponent > 0.0, "pathloss_exponent", "must be positive");
    check(base.side_lobe_gain_db < 0.0, "side_lobe_gain_db", "must be below 0 dB");

    run.theta_bw_rad.clear();
    for (double t : theta_deg) run.theta_bw_rad.push_back(deg_to_rad(t));

    for (Scenario s : scenarios) {
        const bool seen = std::any_of(config.scenarios.begin(), config.scenarios.end(),
                                      [&](const ScenarioConfig& c) { return c.scenario == s; });
        if (seen) continue;
        ScenarioConfig sc = base;
        sc.scenario = s;
        sc.dist_to_body_m = s == Scenario::Hand ? hand_dist : pocket_dist;
        config.scenarios.push_back(sc);
    }
    std::sort(config.scenarios.begin(), config.scenarios.end(),
              [](const ScenarioConfig& a, const ScenarioConfig& b) { return a.scenario < b.scenario; });

    // dedupe policies, keeping the enum order used for row sorting
    std::sort(run.policies.begin(), run.policies.end());
    run.policies.erase(std::unique(run.policies.begin(), run.policies.end()), run.policies.end());

    run.validate();
    for (const ScenarioConfig& sc : config.scenarios) sc.validate();
    return config;
}

SimulationConfig parse_config_text(std::string_view text)
{
    return build_config(parse_config_entries(text));
}

SimulationConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace mmw
