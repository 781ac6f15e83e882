#include "mmw/scenario.hpp"

#include <cmath>
#include <string>

namespace mmw {

std::string_view to_string(Scenario scenario)
{
    switch (scenario) {
    case Scenario::Hand: return "hand";
    case Scenario::Pocket: return "pocket";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view text)
{
    if (text == "hand") return Scenario::Hand;
    if (text == "pocket") return Scenario::Pocket;
    throw DomainError("unknown scenario '" + std::string(text) + "' (expected hand or pocket)");
}

ScenarioConfig ScenarioConfig::defaults(Scenario scenario)
{
    ScenarioConfig config;
    config.scenario = scenario;
    config.dist_to_body_m = scenario == Scenario::Hand ? 0.30 : 0.0;
    return config;
}

void ScenarioConfig::validate() const
{
    require(body_width_m > 0.0, "body_width must be positive");
    require(dist_to_body_m >= 0.0, "dist_to_body must be non-negative");
    require(dist_top_head_m > 0.0, "dist_top_head must be positive");
    require(body_attenuation_db <= 0.0 && std::isfinite(body_attenuation_db),
            "body_attenuation_db must be a finite value <= 0 dB");
    require(std::isfinite(tx_power_dbm), "tx_power_dbm must be finite");
    require(carrier_freq_hz > 0.0, "carrier frequency must be positive");
    require(bandwidth_hz > 0.0, "bandwidth must be positive");
    require(std::isfinite(noise_figure_db), "noise_figure_db must be finite");
    require(pathloss_exponent > 0.0, "pathloss_exponent must be positive");
    require(side_lobe_gain_db < 0.0 && std::isfinite(side_lobe_gain_db),
            "side_lobe_gain_db must be a finite value below 0 dB");
    require(min_beamwidth_rad > 0.0 && min_beamwidth_rad < kPi,
            "min_beamwidth must lie in (0, 180) degrees");
    require(ap_height_m > 0.0, "ap_height must be positive");
    require(area_side_m > 0.0, "area_side must be positive");
}

BodyModel ScenarioConfig::body() const
{
    return BodyModel::make(body_width_m, dist_to_body_m, dist_top_head_m,
                           db_to_linear(body_attenuation_db));
}

RadioConfig ScenarioConfig::radio() const
{
    return RadioConfig::make(tx_power_dbm, carrier_freq_hz, bandwidth_hz, noise_figure_db,
                             pathloss_exponent);
}

AntennaPattern ScenarioConfig::pattern(double beamwidth_rad) const
{
    return AntennaPattern::make(beamwidth_rad, side_lobe_gain(), ap_height_m, min_beamwidth_rad);
}

}  // namespace mmw
