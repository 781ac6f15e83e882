#pragma once

#include "mmw/units.hpp"

namespace mmw {

/// Smallest beamwidth accepted by default. Main-lobe gain diverges as the
/// beamwidth goes to zero.
inline constexpr double kDefaultMinBeamwidthRad = deg_to_rad(1.0);

/// Cone-bulb main-lobe gain for a given beamwidth and side-lobe gain.
///
/// The cap of half-angle beamwidth/2 carries gain M and the rest of the
/// sphere carries m, with the pattern normalized so that the average gain
/// over the sphere is one. Valid for beamwidth in (0, 2pi] and m in [0, 1).
double main_lobe_gain(double beamwidth_rad, double side_lobe_gain,
                      double min_beamwidth_rad = kDefaultMinBeamwidthRad);

/// Radius of the main-lobe footprint on the UE plane for an AP at height
/// ap_height_m pointing straight down. Requires beamwidth in (0, pi).
double illumination_radius(double beamwidth_rad, double ap_height_m);

/// Fraction of the sphere covered by the main-lobe cap, A/S.
double cap_fraction(double beamwidth_rad);

/// Residual of the sphere normalization M*A/S + m*(S-A)/S - 1.
double normalization_residual(double beamwidth_rad, double side_lobe_gain, double main_lobe_gain);

struct AntennaPattern {
    double beamwidth_rad = 0.0;
    double side_lobe_gain = 0.0;
    double main_lobe_gain = 0.0;
    double illumination_radius_m = 0.0;

    /// Builds a validated pattern for an AP mounted ap_height_m above the UE plane.
    static AntennaPattern make(double beamwidth_rad, double side_lobe_gain, double ap_height_m,
                               double min_beamwidth_rad = kDefaultMinBeamwidthRad);
};

/// Gain seen by an omnidirectional UE at the given ground distance from the
/// AP's projection. The footprint boundary belongs to the main lobe.
inline double directivity_gain(double ue_ground_distance_m, const AntennaPattern& pattern)
{
    return ue_ground_distance_m <= pattern.illumination_radius_m ? pattern.main_lobe_gain
                                                                 : pattern.side_lobe_gain;
}

}  // namespace mmw
