#pragma once

#include "mmw/units.hpp"

namespace mmw {

/// Geometry of the user's own body relative to the handheld device.
struct BodyModel {
    double body_width_m = 0.40;
    double dist_to_body_m = 0.30;
    double dist_top_head_m = 0.40;
    double body_attenuation = 1e-4;  // linear power factor

    static BodyModel make(double body_width_m, double dist_to_body_m, double dist_top_head_m,
                          double body_attenuation);

    /// Full horizontal angle of the blocked sector, in (0, pi].
    double blockage_angle_rad() const;
    double block_free_radius_m(double ap_height_m) const;
};

/// Direction from the UE toward the body centre.
class BodyOrientation {
public:
    BodyOrientation() = default;
    explicit BodyOrientation(double azimuth_rad) : azimuth_rad_(wrap_angle(azimuth_rad)) {}

    double azimuth_rad() const { return azimuth_rad_; }

private:
    double azimuth_rad_ = 0.0;
};

double block_free_radius(double ap_height_m, const BodyModel& body);

/// Probability that a uniformly oriented body covers a given AP outside the
/// block-free zone.
double self_block_probability(const BodyModel& body);

/// A link is blocked when the AP lies beyond the block-free radius and its
/// azimuth falls inside the body sector (both bounds inclusive of the sector edge).
bool is_blocked(double ue_to_ap_ground_distance_m, double ue_to_ap_azimuth_rad,
                BodyOrientation orientation, const BodyModel& body, double ap_height_m);

inline double attenuation_factor(bool blocked, const BodyModel& body)
{
    return blocked ? body.body_attenuation : 1.0;
}

}  // namespace mmw
