#include "mmw/blockage.hpp"

#include <cmath>
#include <string>

namespace mmw {

BodyModel BodyModel::make(double body_width_m, double dist_to_body_m, double dist_top_head_m,
                          double body_attenuation)
{
    require(body_width_m > 0.0, "body width must be positive");
    require(dist_to_body_m >= 0.0, "device-to-body distance must be non-negative");
    require(dist_top_head_m > 0.0, "device-to-head-top distance must be positive");
    require(body_attenuation > 0.0 && body_attenuation <= 1.0,
            "body attenuation must lie in (0, 1] as a linear factor, got " +
                std::to_string(body_attenuation));
    return BodyModel{body_width_m, dist_to_body_m, dist_top_head_m, body_attenuation};
}

double BodyModel::blockage_angle_rad() const
{
    if (dist_to_body_m == 0.0) return kPi;
    return 2.0 * std::atan(body_width_m / (2.0 * dist_to_body_m));
}

double BodyModel::block_free_radius_m(double ap_height_m) const
{
    return block_free_radius(ap_height_m, *this);
}

double block_free_radius(double ap_height_m, const BodyModel& body)
{
    require(ap_height_m > 0.0, "AP height must be positive");
    require(body.dist_top_head_m > 0.0, "device-to-head-top distance must be positive");
    return ap_height_m * body.dist_to_body_m / body.dist_top_head_m;
}

double self_block_probability(const BodyModel& body)
{
    return body.blockage_angle_rad() / kTwoPi;
}

bool is_blocked(double ue_to_ap_ground_distance_m, double ue_to_ap_azimuth_rad,
                BodyOrientation orientation, const BodyModel& body, double ap_height_m)
{
    if (!(ue_to_ap_ground_distance_m > block_free_radius(ap_height_m, body))) return false;
    return angular_distance(ue_to_ap_azimuth_rad, orientation.azimuth_rad()) <=
           body.blockage_angle_rad() / 2.0;
}

}  // namespace mmw
