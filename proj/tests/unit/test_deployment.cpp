#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mmw/deployment.hpp"
#include "mmw/error.hpp"

using namespace mmw;

namespace {

std::size_t enumerate_lattice(double d, double side)
{
    const double half = side / 2;
    const int reach = static_cast<int>(side / d) + 3;
    std::size_t n = 0;
    for (int j = -reach; j <= reach; ++j) {
        for (int i = -2 * reach; i <= 2 * reach; ++i) {
            const double x = i * d + j * d / 2;
            const double y = j * d * std::sqrt(3.0) / 2;
            if (std::abs(x) <= half && std::abs(y) <= half) ++n;
        }
    }
    return n;
}

}  // namespace

TEST_CASE("hex grid size and anchor")
{
    const Deployment dep = Deployment::hex_grid(6.8, 400.0);
    CHECK(dep.ap_count() == 3919);
    CHECK(dep.ap_count() == enumerate_lattice(6.8, 400.0));
    const double area_ratio = 400.0 * 400.0 / cell_area(6.8);
    CHECK(std::abs(dep.ap_count() / area_ratio - 1.0) < 0.03);
    CHECK(dep.central_ap() == Point2{0.0, 0.0});
    CHECK(dep.central_neighbours().size() == 6);

    for (double d : {1.5, 2.0, 3.3, 10.0, 47.0}) CHECK(Deployment::hex_grid(d, 400.0).ap_count() == enumerate_lattice(d, 400.0));
}

TEST_CASE("single-site venue keeps the anchor")
{
    const Deployment dep = Deployment::hex_grid(400.0, 400.0);
    REQUIRE(dep.ap_count() == 1);
    CHECK(dep.central_ap() == Point2{0.0, 0.0});
    CHECK(dep.central_neighbours().empty());
}

TEST_CASE("nearest neighbour of every AP is one inter-site distance away")
{
    const Deployment dep = Deployment::hex_grid(10.0, 400.0);
    const auto aps = dep.ap_positions();
    for (std::size_t i = 0; i < aps.size(); i += 7) {
        double best = INFINITY;
        for (std::size_t k = 0; k < aps.size(); ++k) {
            if (k != i) best = std::min(best, squared_distance(aps[i], aps[k]));
        }
        REQUIRE(std::sqrt(best) == doctest::Approx(10.0).epsilon(1e-12));
    }
}

TEST_CASE("hex grid validation")
{
    CHECK_THROWS_AS(Deployment::hex_grid(0.0, 400.0), DomainError);
    CHECK_THROWS_AS(Deployment::hex_grid(6.8, 400.0, 0.0), DomainError);
    CHECK_THROWS_AS(Deployment::hex_grid(500.0, 400.0), DomainError);
}

TEST_CASE("cell area")
{
    CHECK(cell_area(6.8) == doctest::Approx(40.045014670992441).epsilon(1e-12));
    CHECK(cell_area(1.0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
    CHECK(cell_area(2.0) == doctest::Approx(4.0 * cell_area(1.0)).epsilon(1e-14));
}

TEST_CASE("central cell membership matches the nearest AP")
{
    const Deployment dep = Deployment::hex_grid(6.8, 400.0);
    Rng rng = make_stream(99, 0);
    for (int i = 0; i < 20000; ++i) {
        const Point2 p{(uniform01(rng) - 0.5) * 16.0, (uniform01(rng) - 0.5) * 16.0};
        REQUIRE(dep.in_central_cell(p) == (nearest_ap(dep, p) == dep.central_ap_index()));
    }
}

TEST_CASE("sampled UE positions stay inside the hexagon")
{
    const Deployment dep = Deployment::hex_grid(6.8, 400.0);
    const double circumradius = 6.8 / std::sqrt(3.0);
    const int n = 100000;
    double sx = 0.0;
    double sy = 0.0;
    int near = 0;
    for (int i = 0; i < n; ++i) {
        Rng rng = make_stream(42, static_cast<std::uint64_t>(i));
        const Point2 p = sample_ue_position(dep, rng);
        REQUIRE(std::hypot(p.x, p.y) <= circumradius * (1 + 1e-12));
        REQUIRE(nearest_ap(dep, p) == dep.central_ap_index());
        sx += p.x;
        sy += p.y;
        near += std::hypot(p.x, p.y) < 2.0;
    }
    // second moment of a regular hexagon about its centre: 5/12 * circumradius^2 per axis pair
    const double sigma = std::sqrt(5.0 / 24.0) * circumradius / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(sx / n) < 3 * sigma);
    CHECK(std::abs(sy / n) < 3 * sigma);
    const double p_near = kPi * 4.0 / cell_area(6.8);
    CHECK(p_near == doctest::Approx(0.3138).epsilon(1e-3));
    CHECK(std::abs(static_cast<double>(near) / n - p_near) < 3 * std::sqrt(p_near * (1 - p_near) / n));
}

TEST_CASE("UE placement draws orientation after position")
{
    const Deployment dep = Deployment::hex_grid(6.8, 400.0);
    Rng a = make_stream(5, 3);
    Rng b = make_stream(5, 3);
    const UePlacement ue = sample_ue_placement(dep, a);
    const Point2 p = sample_ue_position(dep, b);
    CHECK(ue.position == p);
    CHECK(ue.body_orientation.azimuth_rad() == doctest::Approx(kTwoPi * uniform01(b)));
}
