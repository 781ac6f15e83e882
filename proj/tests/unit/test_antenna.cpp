#include <doctest.h>

#include <cmath>
#include <random>

#include "mmw/antenna.hpp"
#include "mmw/error.hpp"

using namespace mmw;

TEST_CASE("main-lobe gain reference values")
{
    CHECK(main_lobe_gain(kTwoPi, 0.1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(main_lobe_gain(deg_to_rad(41.0), 0.1) == doctest::Approx(28.5235311253745588).epsilon(1e-12));
    CHECK(linear_to_db(main_lobe_gain(deg_to_rad(41.0), 0.1)) == doctest::Approx(14.55).epsilon(1e-3));
    CHECK(main_lobe_gain(deg_to_rad(90.0), 0.0) == doctest::Approx(6.8284271247461901).epsilon(1e-12));
}

TEST_CASE("main-lobe gain rejects out-of-domain arguments")
{
    CHECK_THROWS_AS(main_lobe_gain(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(main_lobe_gain(-0.1, 0.1), DomainError);
    CHECK_THROWS_AS(main_lobe_gain(kTwoPi + 1e-9, 0.1), DomainError);
    CHECK_THROWS_AS(main_lobe_gain(deg_to_rad(41.0), 1.0), DomainError);
    CHECK_THROWS_AS(main_lobe_gain(deg_to_rad(41.0), -0.1), DomainError);
    CHECK_THROWS_AS(main_lobe_gain(deg_to_rad(0.5), 0.1), DomainError);
    CHECK_NOTHROW(main_lobe_gain(deg_to_rad(0.5), 0.1, deg_to_rad(0.1)));
}

TEST_CASE("pattern is normalized over the sphere")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> bw(deg_to_rad(1.0), kTwoPi);
    std::uniform_real_distribution<double> side(0.0, 0.99);
    for (int i = 0; i < 1000; ++i) {
        const double theta = bw(rng);
        const double m = side(rng);
        const double big = main_lobe_gain(theta, m);
        const double a = cap_fraction(theta);
        const double total = big * a + m * (1.0 - a);
        REQUIRE(std::abs(total - 1.0) <= 1e-12);
        REQUIRE(std::abs(normalization_residual(theta, m, big)) <= 1e-12);
    }
}

TEST_CASE("main-lobe gain decreases with beamwidth")
{
    double previous = INFINITY;
    for (double deg = 1.0; deg <= 360.0; deg += 0.5) {
        const double g = main_lobe_gain(deg_to_rad(deg), 0.1);
        REQUIRE(g < previous);
        previous = g;
    }
}

TEST_CASE("illumination radius")
{
    CHECK(illumination_radius(deg_to_rad(41.0), 10.0) == doctest::Approx(3.7388467948480469).epsilon(1e-12));
    CHECK(illumination_radius(deg_to_rad(90.0), 10.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(illumination_radius(deg_to_rad(60.0), 10.0) == doctest::Approx(5.7735026918962576).epsilon(1e-12));
    CHECK_THROWS_AS(illumination_radius(kPi, 10.0), DomainError);
    CHECK_THROWS_AS(illumination_radius(deg_to_rad(41.0), 0.0), DomainError);
}

TEST_CASE("directivity gain switches at the footprint edge")
{
    AntennaPattern p = AntennaPattern::make(deg_to_rad(41.0), 0.1, 10.0);
    p.illumination_radius_m = 3.7;
    CHECK(directivity_gain(0.0, p) == p.main_lobe_gain);
    CHECK(directivity_gain(3.7, p) == p.main_lobe_gain);
    CHECK(directivity_gain(5.0, p) == 0.1);
    CHECK(directivity_gain(std::nextafter(3.7, 4.0), p) == 0.1);
}

TEST_CASE("pattern construction validates gains")
{
    CHECK_THROWS_AS(AntennaPattern::make(deg_to_rad(41.0), 0.0, 10.0), DomainError);
    CHECK_THROWS_AS(AntennaPattern::make(deg_to_rad(180.0), 0.1, 10.0), DomainError);
    const AntennaPattern p = AntennaPattern::make(deg_to_rad(41.0), 0.1, 10.0);
    CHECK(p.main_lobe_gain > 1.0);
    CHECK(p.illumination_radius_m == doctest::Approx(3.7388467948480469));
}
