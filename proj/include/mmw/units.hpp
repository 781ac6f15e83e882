#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "mmw/error.hpp"

namespace mmw {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299'792'458.0;   // m/s
inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kReferenceTemperature = 290.0;   // K

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
inline double dbm_to_watts(double dbm) { return 1e-3 * db_to_linear(dbm); }
inline double watts_to_dbm(double watts) { return linear_to_db(watts / 1e-3); }

/// Wraps an angle to [0, 2pi).
inline double wrap_angle(double rad)
{
    double wrapped = std::fmod(rad, kTwoPi);
    if (wrapped < 0.0) wrapped += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2pi
    if (wrapped >= kTwoPi) wrapped = 0.0;
    return wrapped;
}

/// Smallest absolute difference between two angles, in [0, pi].
inline double angular_distance(double a_rad, double b_rad)
{
    const double diff = wrap_angle(a_rad - b_rad);
    return diff > kPi ? kTwoPi - diff : diff;
}

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw DomainError(message);
}

}  // namespace mmw
