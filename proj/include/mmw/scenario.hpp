#pragma once

#include <string_view>

#include "mmw/antenna.hpp"
#include "mmw/blockage.hpp"
#include "mmw/channel.hpp"

namespace mmw {

/// Where the user holds the device.
enum class Scenario {
    Hand,    // operated in hand, 0.30 m in front of the body
    Pocket,  // worn against the body
};

std::string_view to_string(Scenario scenario);
Scenario parse_scenario(std::string_view text);  // "hand" | "pocket"

/// Physical parameters of one blockage scenario. Defaults reproduce the
/// reference indoor setup: 60 GHz, 100 MHz, APs 10 m above the UE over a
/// 400 m square venue.
struct ScenarioConfig {
    Scenario scenario = Scenario::Hand;

    double body_width_m = 0.40;
    double dist_to_body_m = 0.30;
    double dist_top_head_m = 0.40;
    double body_attenuation_db = -40.0;

    double tx_power_dbm = 20.0;
    double carrier_freq_hz = 60e9;
    double bandwidth_hz = 100e6;
    double noise_figure_db = 9.0;
    double pathloss_exponent = 2.0;
    double side_lobe_gain_db = -10.0;
    double min_beamwidth_rad = kDefaultMinBeamwidthRad;

    double ap_height_m = 10.0;
    double area_side_m = 400.0;

    static ScenarioConfig defaults(Scenario scenario);

    /// Throws DomainError naming the first invalid field.
    void validate() const;

    BodyModel body() const;
    RadioConfig radio() const;
    double side_lobe_gain() const { return db_to_linear(side_lobe_gain_db); }
    AntennaPattern pattern(double beamwidth_rad) const;
};

}  // namespace mmw
