#pragma once

#include <cstddef>
#include <span>

#include "mmw/units.hpp"

namespace mmw {

struct RadioConfig {
    double tx_power_w = 0.1;
    double carrier_freq_hz = 60e9;
    double bandwidth_hz = 100e6;
    double noise_figure_linear = 0.0;
    double ref_loss_1m = 0.0;  // L_0, free-space loss at 1 m
    double pathloss_exponent = 2.0;
    double noise_power_w = 0.0;

    /// Derives the 1 m reference loss and thermal noise from the given values.
    static RadioConfig make(double tx_power_dbm, double carrier_freq_hz, double bandwidth_hz,
                            double noise_figure_db, double pathloss_exponent);
};

/// Friis free-space loss at 1 m, (c / (4 pi f))^2.
double free_space_ref_loss(double carrier_freq_hz);

/// L_0 * R^-alpha with R the 3-D AP-UE distance.
double path_loss(double ground_distance_m, double ap_height_m, const RadioConfig& config);

/// Thermal noise k_B * 290 K * bandwidth * noise figure, in watts.
double noise_power(double bandwidth_hz, double noise_figure_db);

struct LinkState {
    std::size_t ap_index = 0;
    double ground_distance_m = 0.0;
    double gain = 1.0;       // directivity gain, m or M
    double blockage = 1.0;   // body attenuation factor, L_body or 1
    double received_power_w = 0.0;
};

/// Fills in a link's received power, P_TX * G * L(d) * B.
LinkState make_link(std::size_t ap_index, double ground_distance_m, double gain, double blockage,
                    double ap_height_m, const RadioConfig& config);

/// Serving power over noise plus the power of every other link.
/// serving_index is a position in links.
double sinr(std::size_t serving_index, std::span<const LinkState> links, const RadioConfig& config);

}  // namespace mmw
