#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mmw/association.hpp"
#include "mmw/scenario.hpp"

namespace mmw {

/// Identifies the sweep cell a sample set was drawn for.
struct ConfigKey {
    double d_s_m = 0.0;
    double theta_bw_rad = 0.0;
    Scenario scenario = Scenario::Hand;
    AssociationPolicy policy = AssociationPolicy::MinDistance3d;
    std::uint64_t seed = 0;
};

/// Per-realization SINR samples plus a few serving-link diagnostics, all
/// indexed by realization.
struct SampleSet {
    std::vector<double> sinr_values;
    std::vector<std::uint32_t> serving_ap;
    std::vector<std::uint8_t> serving_blocked;
    std::vector<double> serving_ground_distance_m;
    ConfigKey key;

    std::size_t realization_count() const { return sinr_values.size(); }
    void resize(std::size_t n);

    /// Appends other's samples; used to combine worker partitions.
    void merge(const SampleSet& other);
};

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

/// Fraction of samples with SINR strictly above the threshold.
double coverage(std::span<const double> sinr_values, double threshold_db);
inline double coverage(const SampleSet& samples, double threshold_db)
{
    return coverage(samples.sinr_values, threshold_db);
}

/// Mean log2(1 + SINR) per square metre of cell, in bit/s/Hz/m^2.
double ase(std::span<const double> sinr_values, double cell_area_m2);
inline double ase(const SampleSet& samples, double cell_area_m2)
{
    return ase(samples.sinr_values, cell_area_m2);
}

struct SweepRow {
    double d_s_m = 0.0;
    double theta_bw_rad = 0.0;
    double threshold_db = 0.0;
    Scenario scenario = Scenario::Hand;
    AssociationPolicy policy = AssociationPolicy::MinDistance3d;
    double coverage = 0.0;
    double ase = 0.0;
    std::size_t realization_count = 0;
    std::uint64_t seed = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;

    /// Orders rows by (d_s, theta_bw, threshold, scenario, association).
    void sort();
    void append(const SweepResult& other);
};

/// Restricts a query to one curve family of a sweep. Unset fields must be
/// unambiguous in the sweep.
struct RowSelector {
    std::optional<Scenario> scenario;
    std::optional<AssociationPolicy> policy;
};

struct PeakCoverage {
    double theta_bw_rad = 0.0;
    double coverage = 0.0;
    double ase = 0.0;
};

/// Beamwidth with the highest coverage on the swept grid for one d_s and
/// threshold; ties go to the smaller beamwidth.
PeakCoverage peak_coverage_beamwidth(const SweepResult& sweep, double d_s_m, double threshold_db,
                                     RowSelector selector = {});

struct TradeoffPoint {
    double d_s_m = 0.0;
    double theta_bw_rad = 0.0;
    double coverage = 0.0;
    double ase = 0.0;
};

/// Peak coverage and the ASE of the same configuration, one point per d_s,
/// ordered by increasing d_s.
std::vector<TradeoffPoint> tradeoff_curve(const SweepResult& sweep, double threshold_db,
                                          RowSelector selector = {});

/// Relative-tolerance equality used for matching grid values.
bool same_grid_value(double a, double b);

}  // namespace mmw
