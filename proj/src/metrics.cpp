#include "mmw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace mmw {

void SampleSet::resize(std::size_t n)
{
    sinr_values.resize(n);
    serving_ap.resize(n);
    serving_blocked.resize(n);
    serving_ground_distance_m.resize(n);
}

void SampleSet::merge(const SampleSet& other)
{
    sinr_values.insert(sinr_values.end(), other.sinr_values.begin(), other.sinr_values.end());
    serving_ap.insert(serving_ap.end(), other.serving_ap.begin(), other.serving_ap.end());
    serving_blocked.insert(serving_blocked.end(), other.serving_blocked.begin(),
                           other.serving_blocked.end());
    serving_ground_distance_m.insert(serving_ground_distance_m.end(),
                                     other.serving_ground_distance_m.begin(),
                                     other.serving_ground_distance_m.end());
}

double pairwise_sum(std::span<const double> values)
{
    constexpr std::size_t kBlock = 64;
    if (values.size() <= kBlock) {
        double sum = 0.0;
        for (double v : values) sum += v;
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double coverage(std::span<const double> sinr_values, double threshold_db)
{
    require(!sinr_values.empty(), "coverage needs at least one sample");
    const double threshold = db_to_linear(threshold_db);
    const auto covered =
        std::count_if(sinr_values.begin(), sinr_values.end(), [&](double s) { return s > threshold; });
    return static_cast<double>(covered) / static_cast<double>(sinr_values.size());
}

double ase(std::span<const double> sinr_values, double cell_area_m2)
{
    require(!sinr_values.empty(), "ASE needs at least one sample");
    require(cell_area_m2 > 0.0, "cell area must be positive");
    std::vector<double> efficiency(sinr_values.size());
    std::transform(sinr_values.begin(), sinr_values.end(), efficiency.begin(),
                   [](double s) { return std::log2(1.0 + s); });
    return pairwise_sum(efficiency) / static_cast<double>(efficiency.size()) / cell_area_m2;
}

void SweepResult::sort()
{
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tuple(a.d_s_m, a.theta_bw_rad, a.threshold_db, a.scenario, a.policy) <
               std::tuple(b.d_s_m, b.theta_bw_rad, b.threshold_db, b.scenario, b.policy);
    });
}

void SweepResult::append(const SweepResult& other)
{
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

bool same_grid_value(double a, double b)
{
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

bool selected(const SweepRow& row, double threshold_db, const RowSelector& selector)
{
    return same_grid_value(row.threshold_db, threshold_db) &&
           (!selector.scenario || row.scenario == *selector.scenario) &&
           (!selector.policy || row.policy == *selector.policy);
}

void require_single_family(const std::vector<const SweepRow*>& rows)
{
    std::set<std::pair<Scenario, AssociationPolicy>> families;
    for (const SweepRow* row : rows) families.emplace(row->scenario, row->policy);
    require(families.size() <= 1,
            "sweep mixes several scenario/association families; select one explicitly");
}

}  // namespace

PeakCoverage peak_coverage_beamwidth(const SweepResult& sweep, double d_s_m, double threshold_db,
                                     RowSelector selector)
{
    std::vector<const SweepRow*> candidates;
    for (const SweepRow& row : sweep.rows) {
        if (same_grid_value(row.d_s_m, d_s_m) && selected(row, threshold_db, selector))
            candidates.push_back(&row);
    }
    require(!candidates.empty(), "no sweep rows for d_s = " + std::to_string(d_s_m) +
                                     " m at threshold " + std::to_string(threshold_db) + " dB");
    require_single_family(candidates);

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const SweepRow* a, const SweepRow* b) { return a->theta_bw_rad < b->theta_bw_rad; });
    const SweepRow* best = candidates.front();
    for (const SweepRow* row : candidates) {
        if (row->coverage > best->coverage) best = row;
    }
    return PeakCoverage{best->theta_bw_rad, best->coverage, best->ase};
}

std::vector<TradeoffPoint> tradeoff_curve(const SweepResult& sweep, double threshold_db,
                                          RowSelector selector)
{
    std::vector<double> distances;
    for (const SweepRow& row : sweep.rows) {
        if (!selected(row, threshold_db, selector)) continue;
        const bool seen = std::any_of(distances.begin(), distances.end(),
                                      [&](double d) { return same_grid_value(d, row.d_s_m); });
        if (!seen) distances.push_back(row.d_s_m);
    }
    std::sort(distances.begin(), distances.end());

    std::vector<TradeoffPoint> curve;
    curve.reserve(distances.size());
    for (double d : distances) {
        const PeakCoverage peak = peak_coverage_beamwidth(sweep, d, threshold_db, selector);
        curve.push_back(TradeoffPoint{d, peak.theta_bw_rad, peak.coverage, peak.ase});
    }
    return curve;
}

}  // namespace mmw
