#include "mmw/antenna.hpp"

#include <cmath>
#include <string>

namespace mmw {

double cap_fraction(double beamwidth_rad)
{
    return (1.0 - std::cos(beamwidth_rad / 2.0)) / 2.0;
}

double main_lobe_gain(double beamwidth_rad, double side_lobe_gain, double min_beamwidth_rad)
{
    require(beamwidth_rad > 0.0 && beamwidth_rad <= kTwoPi,
            "beamwidth must lie in (0, 2pi], got " + std::to_string(beamwidth_rad) + " rad");
    require(beamwidth_rad >= min_beamwidth_rad,
            "beamwidth " + std::to_string(rad_to_deg(beamwidth_rad)) +
                " deg is below the minimum " + std::to_string(rad_to_deg(min_beamwidth_rad)) +
                " deg");
    require(side_lobe_gain >= 0.0 && side_lobe_gain < 1.0,
            "side-lobe gain must lie in [0, 1), got " + std::to_string(side_lobe_gain));

    const double c = std::cos(beamwidth_rad / 2.0);
    return (2.0 - side_lobe_gain * (1.0 + c)) / (1.0 - c);
}

double illumination_radius(double beamwidth_rad, double ap_height_m)
{
    require(beamwidth_rad > 0.0 && beamwidth_rad < kPi,
            "beamwidth must lie in (0, pi) for a bounded footprint, got " +
                std::to_string(beamwidth_rad) + " rad");
    require(ap_height_m > 0.0, "AP height must be positive");
    return ap_height_m * std::tan(beamwidth_rad / 2.0);
}

double normalization_residual(double beamwidth_rad, double side_lobe_gain, double main_gain)
{
    const double a = cap_fraction(beamwidth_rad);
    return main_gain * a + side_lobe_gain * (1.0 - a) - 1.0;
}

AntennaPattern AntennaPattern::make(double beamwidth_rad, double side_lobe_gain,
                                    double ap_height_m, double min_beamwidth_rad)
{
    require(side_lobe_gain > 0.0 && side_lobe_gain < 1.0,
            "side-lobe gain must lie in (0, 1), got " + std::to_string(side_lobe_gain));

    AntennaPattern pattern;
    pattern.beamwidth_rad = beamwidth_rad;
    pattern.side_lobe_gain = side_lobe_gain;
    pattern.main_lobe_gain = mmw::main_lobe_gain(beamwidth_rad, side_lobe_gain, min_beamwidth_rad);
    pattern.illumination_radius_m = illumination_radius(beamwidth_rad, ap_height_m);

    require(pattern.main_lobe_gain >= 1.0 && pattern.main_lobe_gain > side_lobe_gain,
            "main-lobe gain must exceed both 1 and the side-lobe gain");
    return pattern;
}

}  // namespace mmw
