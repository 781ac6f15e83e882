#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mmw/antenna.hpp"
#include "mmw/association.hpp"
#include "mmw/blockage.hpp"
#include "mmw/channel.hpp"
#include "mmw/deployment.hpp"
#include "mmw/metrics.hpp"
#include "mmw/scenario.hpp"

namespace mmw {

inline constexpr std::size_t kDefaultRealizations = 20'000;

/// Grid of a parameter sweep. Angles are in radians.
struct RunSpec {
    std::vector<double> d_s_m{6.8};
    std::vector<double> theta_bw_rad{deg_to_rad(41.0)};
    std::vector<double> threshold_db{-5.0};
    std::vector<AssociationPolicy> policies{AssociationPolicy::MinDistance3d};
    std::size_t realizations = kDefaultRealizations;
    std::uint64_t master_seed = 1;

    void validate() const;
};

/// Worker count to use: requested if nonzero, else the hardware concurrency
/// capped by MMWAVE_SIM_THREADS when that is set and nonzero.
unsigned resolve_worker_count(unsigned requested = 0);

/// Seed of the random stream shared by every association policy of one
/// (d_s, beamwidth) sweep cell.
std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t d_s_index, std::size_t theta_index);

/// One fully resolved snapshot, built link by link from the model primitives.
struct Realization {
    UePlacement ue;
    std::vector<LinkState> links;
    std::size_t serving = 0;
    double sinr = 0.0;
};

/// Replays realization `index` of the stream `stream_seed` through the
/// per-link model functions. Slow; meant for inspection and cross-checks.
Realization simulate_realization(const Deployment& deployment, const AntennaPattern& pattern,
                                 const BodyModel& body, const RadioConfig& radio,
                                 AssociationPolicy policy, std::uint64_t stream_seed,
                                 std::uint64_t index);

/// Monte Carlo estimate for one configuration. Realization i always uses the
/// stream derived from (stream_seed, i), so output is independent of the
/// worker count.
SampleSet run_cell(const Deployment& deployment, const AntennaPattern& pattern,
                   const BodyModel& body, const RadioConfig& radio, AssociationPolicy policy,
                   std::size_t realizations, std::uint64_t stream_seed, unsigned workers = 0);

/// Same as above for several policies evaluated on the same realizations.
/// Returns one sample set per policy, in the given order.
std::vector<SampleSet> run_cell(const Deployment& deployment, const AntennaPattern& pattern,
                                const BodyModel& body, const RadioConfig& radio,
                                std::span<const AssociationPolicy> policies,
                                std::size_t realizations, std::uint64_t stream_seed,
                                unsigned workers = 0);

/// Runs every (d_s, beamwidth) cell of `spec` and reports coverage for each
/// threshold and policy. Rows come back sorted.
SweepResult run_sweep(const RunSpec& spec, const ScenarioConfig& scenario, unsigned workers = 0);
SweepResult run_sweep(const RunSpec& spec, std::span<const ScenarioConfig> scenarios,
                      unsigned workers = 0);

}  // namespace mmw
