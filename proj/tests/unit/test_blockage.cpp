#include <doctest.h>

#include <cmath>
#include <random>

#include "mmw/blockage.hpp"
#include "mmw/error.hpp"

using namespace mmw;

namespace {

BodyModel hand() { return BodyModel::make(0.4, 0.3, 0.4, 1e-4); }
BodyModel pocket() { return BodyModel::make(0.4, 0.0, 0.4, 1e-4); }

// Ray from the device (origin, UE plane) to the AP against a vertical slab
// of width w, normal to the body direction at distance d, topped at d_top.
bool slab_blocks(double ground, double azimuth, double orientation, const BodyModel& body, double h)
{
    const double ux = std::cos(orientation);
    const double uy = std::sin(orientation);
    const double dx = ground * std::cos(azimuth);
    const double dy = ground * std::sin(azimuth);
    const double along = dx * ux + dy * uy;
    if (along <= 0.0) return false;
    const double t = body.dist_to_body_m / along;
    if (t > 1.0) return false;
    const double lateral = t * (-dx * uy + dy * ux);
    const double z = t * h;
    return std::abs(lateral) <= body.body_width_m / 2 && z <= body.dist_top_head_m;
}

}  // namespace

TEST_CASE("block-free radius")
{
    CHECK(block_free_radius(10.0, hand()) == doctest::Approx(7.5));
    CHECK(block_free_radius(10.0, pocket()) == 0.0);
    CHECK(block_free_radius(20.0, hand()) == doctest::Approx(15.0));
    CHECK_THROWS_AS(block_free_radius(0.0, hand()), DomainError);
}

TEST_CASE("self-block probability")
{
    CHECK(self_block_probability(pocket()) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(self_block_probability(hand()) == doctest::Approx(0.18716704181099882).epsilon(1e-12));
    CHECK(self_block_probability(BodyModel::make(1e-12, 0.3, 0.4, 1e-4)) == doctest::Approx(0.0));
    CHECK(hand().blockage_angle_rad() == doctest::Approx(deg_to_rad(67.380135051959574)).epsilon(1e-12));
    CHECK(pocket().blockage_angle_rad() == kPi);
}

TEST_CASE("self-block probability grows as the device nears the body")
{
    double previous = 0.0;
    for (double d = 1.0; d >= 0.0; d -= 0.05) {
        const double p = self_block_probability(BodyModel::make(0.4, std::max(d, 0.0), 0.4, 1e-4));
        REQUIRE(p > previous);
        previous = p;
    }
}

TEST_CASE("body model validation")
{
    CHECK_THROWS_AS(BodyModel::make(0.0, 0.3, 0.4, 1e-4), DomainError);
    CHECK_THROWS_AS(BodyModel::make(0.4, -0.1, 0.4, 1e-4), DomainError);
    CHECK_THROWS_AS(BodyModel::make(0.4, 0.3, 0.0, 1e-4), DomainError);
    CHECK_THROWS_AS(BodyModel::make(0.4, 0.3, 0.4, 0.0), DomainError);
    CHECK_THROWS_AS(BodyModel::make(0.4, 0.3, 0.4, 1.5), DomainError);
}

TEST_CASE("is_blocked reference cases")
{
    for (double az = 0.0; az < kTwoPi; az += 0.3) {
        for (double o = 0.0; o < kTwoPi; o += 0.7) {
            CHECK_FALSE(is_blocked(5.0, az, BodyOrientation(o), hand(), 10.0));
        }
    }
    CHECK(is_blocked(5.0, 0.0, BodyOrientation(0.0), pocket(), 10.0));
    CHECK(is_blocked(10.0, deg_to_rad(10.0), BodyOrientation(0.0), hand(), 10.0));
    CHECK(slab_blocks(10.0, deg_to_rad(10.0), 0.0, hand(), 10.0));
    CHECK_FALSE(is_blocked(10.0, deg_to_rad(40.0), BodyOrientation(0.0), hand(), 10.0));
    CHECK_FALSE(is_blocked(10.0, kPi, BodyOrientation(0.0), hand(), 10.0));
}

TEST_CASE("pocket body blocks exactly the half-plane behind the device")
{
    for (double az = 0.0; az < kTwoPi; az += 0.01) {
        const bool expected = angular_distance(az, 1.0) <= kPi / 2;
        REQUIRE(is_blocked(3.0, az, BodyOrientation(1.0), pocket(), 10.0) == expected);
    }
}

TEST_CASE("sector test agrees with ray casting against a body slab")
{
    // The slab's top edge reaches the AP ray at ground distance r_bf / cos(phi),
    // so the flat-slab oracle is slightly stricter than the sector model in a
    // thin band beyond r_bf. Outside that band both must agree exactly.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ground(0.0, 40.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const BodyModel body = hand();
    const double h = 10.0;
    const double rbf = block_free_radius(h, body);
    int compared = 0;
    for (int i = 0; i < 200000; ++i) {
        const double g = ground(rng);
        const double az = angle(rng);
        const double o = angle(rng);
        const bool model = is_blocked(g, az, BodyOrientation(o), body, h);
        const bool oracle = slab_blocks(g, az, o, body, h);
        if (oracle) REQUIRE(model);
        const double phi = angular_distance(az, o);
        const bool in_band = phi < kPi / 2 && g > rbf && g < rbf / std::cos(phi) * (1 + 1e-9);
        if (!in_band) {
            REQUIRE(model == oracle);
            ++compared;
        }
    }
    CHECK(compared > 160000);
}

TEST_CASE("blocking is invariant under a common rotation")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> ground(0.0, 30.0);
    for (int i = 0; i < 20000; ++i) {
        const double g = ground(rng);
        const double az = angle(rng);
        const double o = angle(rng);
        const double rot = angle(rng);
        const bool base = is_blocked(g, az, BodyOrientation(o), hand(), 10.0);
        const bool turned = is_blocked(g, az + rot, BodyOrientation(o + rot), hand(), 10.0);
        // rounding in the wrapped angles can only matter right on the sector edge
        const double edge = std::abs(angular_distance(az, o) - hand().blockage_angle_rad() / 2);
        if (edge > 1e-9) REQUIRE(base == turned);
    }
}

TEST_CASE("empirical blocked fraction matches the sector probability")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (const BodyModel& body : {hand(), pocket()}) {
        const int n = 200000;
        int blocked = 0;
        for (int i = 0; i < n; ++i) blocked += is_blocked(12.0, 0.7, BodyOrientation(angle(rng)), body, 10.0);
        const double p = self_block_probability(body);
        CHECK(std::abs(static_cast<double>(blocked) / n - p) < 4.0 * std::sqrt(p * (1 - p) / n));
    }
}

TEST_CASE("attenuation factor")
{
    CHECK(attenuation_factor(true, hand()) == doctest::Approx(1e-4));
    CHECK(attenuation_factor(false, hand()) == 1.0);
    CHECK(attenuation_factor(true, BodyModel::make(0.4, 0.3, 0.4, db_to_linear(0.0))) == 1.0);
}
