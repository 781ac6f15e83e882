#include "mmw/deployment.hpp"

#include <cmath>
#include <string>

namespace mmw {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

}  // namespace

Deployment Deployment::hex_grid(double inter_site_distance_m, double area_side_m,
                                double ap_height_m)
{
    require(inter_site_distance_m > 0.0, "inter-site distance must be positive");
    require(ap_height_m > 0.0, "AP height must be positive");
    require(area_side_m >= inter_site_distance_m,
            "venue side " + std::to_string(area_side_m) +
                " m must be at least the inter-site distance " +
                std::to_string(inter_site_distance_m) + " m");

    Deployment deployment;
    deployment.inter_site_distance_m_ = inter_site_distance_m;
    deployment.ap_height_m_ = ap_height_m;
    deployment.area_side_m_ = area_side_m;

    const double d = inter_site_distance_m;
    const double row_pitch = d * kSqrt3 / 2.0;
    // points lying on the venue edge are kept despite rounding in x and y
    const double half = area_side_m / 2.0 * (1.0 + 1e-12);
    const auto max_row = static_cast<long>(std::floor(half / row_pitch));

    for (long j = -max_row; j <= max_row; ++j) {
        const double shift = 0.5 * static_cast<double>(j);
        const auto first = static_cast<long>(std::ceil(-half / d - shift));
        const auto last = static_cast<long>(std::floor(half / d - shift));
        for (long i = first; i <= last; ++i) {
            const Point2 p{d * (static_cast<double>(i) + shift), row_pitch * static_cast<double>(j)};
            if (std::abs(p.x) > half || std::abs(p.y) > half) continue;
            if (i == 0 && j == 0) deployment.central_ap_index_ = deployment.ap_positions_.size();
            deployment.ap_positions_.push_back(p);
        }
    }

    const double d2 = d * d;
    for (std::size_t k = 0; k < deployment.ap_positions_.size(); ++k) {
        if (k == deployment.central_ap_index_) continue;
        const double r2 = squared_distance(deployment.ap_positions_[k], Point2{});
        if (std::abs(r2 - d2) <= 1e-9 * d2) deployment.central_neighbours_.push_back(k);
    }
    return deployment;
}

bool Deployment::in_central_cell(Point2 p) const
{
    // The six lattice neighbours bound the cell even when some of them fall
    // outside a small venue. Lattice rows j < 0, and i < 0 on row 0, precede
    // the centre in index order and win ties.
    struct Offset {
        int i;
        int j;
        bool precedes_centre;
    };
    static constexpr std::array<Offset, 6> kRing{{
        {0, -1, true}, {1, -1, true}, {-1, 0, true}, {1, 0, false}, {-1, 1, false}, {0, 1, false},
    }};

    const double d = inter_site_distance_m_;
    const Point2 c = central_ap();
    const double own = squared_distance(p, c);
    for (const Offset& o : kRing) {
        const Point2 q{c.x + d * (o.i + 0.5 * o.j), c.y + d * kSqrt3 / 2.0 * o.j};
        const double other = squared_distance(p, q);
        if (other < own || (other == own && o.precedes_centre)) return false;
    }
    return true;
}

double cell_area(double inter_site_distance_m)
{
    require(inter_site_distance_m > 0.0, "inter-site distance must be positive");
    return kSqrt3 / 2.0 * inter_site_distance_m * inter_site_distance_m;
}

std::size_t nearest_ap(const Deployment& deployment, Point2 p)
{
    const auto aps = deployment.ap_positions();
    require(!aps.empty(), "deployment has no APs");
    std::size_t best = 0;
    double best_d2 = squared_distance(p, aps[0]);
    for (std::size_t k = 1; k < aps.size(); ++k) {
        const double d2 = squared_distance(p, aps[k]);
        if (d2 < best_d2) {
            best = k;
            best_d2 = d2;
        }
    }
    return best;
}

Point2 sample_ue_position(const Deployment& deployment, Rng& rng)
{
    const double half_w = deployment.inter_site_distance_m() / 2.0;
    const double half_h = deployment.inter_site_distance_m() / kSqrt3;
    const Point2 centre = deployment.central_ap();
    for (;;) {
        const Point2 p{centre.x + (2.0 * uniform01(rng) - 1.0) * half_w,
                       centre.y + (2.0 * uniform01(rng) - 1.0) * half_h};
        if (deployment.in_central_cell(p)) return p;
    }
}

UePlacement sample_ue_placement(const Deployment& deployment, Rng& rng)
{
    UePlacement placement;
    placement.position = sample_ue_position(deployment, rng);
    placement.body_orientation = BodyOrientation(kTwoPi * uniform01(rng));
    return placement;
}

}  // namespace mmw
