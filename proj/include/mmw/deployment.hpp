#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mmw/blockage.hpp"
#include "mmw/rng.hpp"

namespace mmw {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double squared_distance(Point2 a, Point2 b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Hexagonal AP layout over a square venue. Immutable once built.
class Deployment {
public:
    /// Triangular lattice with basis (d, 0) and (d/2, d*sqrt(3)/2), anchored
    /// with one AP at the venue centre (the origin). Every lattice point inside
    /// the closed square [-side/2, side/2]^2 is kept, ordered row by row.
    static Deployment hex_grid(double inter_site_distance_m, double area_side_m,
                               double ap_height_m = 10.0);

    double inter_site_distance_m() const { return inter_site_distance_m_; }
    double ap_height_m() const { return ap_height_m_; }
    double area_side_m() const { return area_side_m_; }
    std::span<const Point2> ap_positions() const { return ap_positions_; }
    std::size_t ap_count() const { return ap_positions_.size(); }
    std::size_t central_ap_index() const { return central_ap_index_; }
    Point2 central_ap() const { return ap_positions_[central_ap_index_]; }

    /// Indices of the six first-ring neighbours of the central AP that fall
    /// inside the venue (fewer when the venue is smaller than one ring).
    std::span<const std::size_t> central_neighbours() const { return central_neighbours_; }

    /// True if p lies in the hexagonal lattice cell of the central AP. Boundary
    /// ties go to the AP that comes first in row-major lattice order.
    bool in_central_cell(Point2 p) const;

private:
    double inter_site_distance_m_ = 0.0;
    double ap_height_m_ = 0.0;
    double area_side_m_ = 0.0;
    std::vector<Point2> ap_positions_;
    std::size_t central_ap_index_ = 0;
    std::vector<std::size_t> central_neighbours_;
};

inline Deployment generate_hex_grid(double inter_site_distance_m, double area_side_m,
                                    double ap_height_m = 10.0)
{
    return Deployment::hex_grid(inter_site_distance_m, area_side_m, ap_height_m);
}

/// Area of one hexagonal Voronoi cell of the lattice.
double cell_area(double inter_site_distance_m);

/// Nearest AP by full scan; ties resolved to the lowest index.
std::size_t nearest_ap(const Deployment& deployment, Point2 p);

struct UePlacement {
    Point2 position;
    BodyOrientation body_orientation;
};

/// Uniform point in the central hexagonal cell, by rejection from the cell's
/// bounding box.
Point2 sample_ue_position(const Deployment& deployment, Rng& rng);

/// UE position followed by a uniform body orientation, drawn in that order.
UePlacement sample_ue_placement(const Deployment& deployment, Rng& rng);

}  // namespace mmw
