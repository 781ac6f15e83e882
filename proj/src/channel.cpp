#include "mmw/channel.hpp"

#include <cmath>
#include <string>

namespace mmw {

RadioConfig RadioConfig::make(double tx_power_dbm, double carrier_freq_hz, double bandwidth_hz,
                              double noise_figure_db, double pathloss_exponent)
{
    require(carrier_freq_hz > 0.0, "carrier frequency must be positive");
    require(bandwidth_hz > 0.0, "bandwidth must be positive");
    require(pathloss_exponent > 0.0, "path-loss exponent must be positive");
    require(std::isfinite(tx_power_dbm), "transmit power must be finite");
    require(std::isfinite(noise_figure_db), "noise figure must be finite");

    RadioConfig config;
    config.tx_power_w = dbm_to_watts(tx_power_dbm);
    config.carrier_freq_hz = carrier_freq_hz;
    config.bandwidth_hz = bandwidth_hz;
    config.noise_figure_linear = db_to_linear(noise_figure_db);
    config.ref_loss_1m = free_space_ref_loss(carrier_freq_hz);
    config.pathloss_exponent = pathloss_exponent;
    config.noise_power_w = noise_power(bandwidth_hz, noise_figure_db);
    return config;
}

double free_space_ref_loss(double carrier_freq_hz)
{
    require(carrier_freq_hz > 0.0, "carrier frequency must be positive");
    const double ratio = kSpeedOfLight / (4.0 * kPi * carrier_freq_hz);
    return ratio * ratio;
}

double path_loss(double ground_distance_m, double ap_height_m, const RadioConfig& config)
{
    require(ap_height_m > 0.0, "AP height must be positive");
    const double r2 = ground_distance_m * ground_distance_m + ap_height_m * ap_height_m;
    if (config.pathloss_exponent == 2.0) return config.ref_loss_1m / r2;
    return config.ref_loss_1m * std::pow(r2, -config.pathloss_exponent / 2.0);
}

double noise_power(double bandwidth_hz, double noise_figure_db)
{
    require(bandwidth_hz > 0.0, "bandwidth must be positive");
    return kBoltzmann * kReferenceTemperature * bandwidth_hz * db_to_linear(noise_figure_db);
}

LinkState make_link(std::size_t ap_index, double ground_distance_m, double gain, double blockage,
                    double ap_height_m, const RadioConfig& config)
{
    LinkState link;
    link.ap_index = ap_index;
    link.ground_distance_m = ground_distance_m;
    link.gain = gain;
    link.blockage = blockage;
    link.received_power_w =
        config.tx_power_w * gain * path_loss(ground_distance_m, ap_height_m, config) * blockage;
    return link;
}

double sinr(std::size_t serving_index, std::span<const LinkState> links, const RadioConfig& config)
{
    require(!links.empty(), "SINR needs at least one link");
    require(serving_index < links.size(),
            "serving index " + std::to_string(serving_index) + " out of range");

    double interference = 0.0;
    for (std::size_t j = 0; j < links.size(); ++j) {
        if (j != serving_index) interference += links[j].received_power_w;
    }
    return links[serving_index].received_power_w / (config.noise_power_w + interference);
}

}  // namespace mmw
