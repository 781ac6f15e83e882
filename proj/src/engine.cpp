#include "mmw/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

namespace mmw {

void RunSpec::validate() const
{
    require(!d_s_m.empty(), "d_s list is empty");
    require(!theta_bw_rad.empty(), "theta_bw list is empty");
    require(!threshold_db.empty(), "threshold list is empty");
    require(!policies.empty(), "association list is empty");
    require(realizations >= 1, "realizations must be at least 1");
    for (double d : d_s_m) require(d > 0.0, "d_s values must be positive, got " + std::to_string(d));
    for (double t : theta_bw_rad) {
        require(t > 0.0 && t < kPi, "theta_bw values must lie in (0, 180) degrees, got " +
                                        std::to_string(rad_to_deg(t)));
    }
    for (double t : threshold_db) require(!std::isnan(t), "threshold values must be numbers");
}

unsigned resolve_worker_count(unsigned requested)
{
    if (requested > 0) return requested;
    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MMWAVE_SIM_THREADS")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(std::min<unsigned long>(value, hardware));
    }
    return hardware;
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t d_s_index, std::size_t theta_index)
{
    return derive_seed(master_seed, {d_s_index, theta_index});
}

Realization simulate_realization(const Deployment& deployment, const AntennaPattern& pattern,
                                 const BodyModel& body, const RadioConfig& radio,
                                 AssociationPolicy policy, std::uint64_t stream_seed,
                                 std::uint64_t index)
{
    Rng rng = make_stream(stream_seed, index);
    Realization r;
    r.ue = sample_ue_placement(deployment, rng);

    const auto aps = deployment.ap_positions();
    const double h = deployment.ap_height_m();
    r.links.reserve(aps.size());
    for (std::size_t k = 0; k < aps.size(); ++k) {
        const double dx = aps[k].x - r.ue.position.x;
        const double dy = aps[k].y - r.ue.position.y;
        const double d = std::hypot(dx, dy);
        const double azimuth = wrap_angle(std::atan2(dy, dx));
        const bool blocked = is_blocked(d, azimuth, r.ue.body_orientation, body, h);
        r.links.push_back(make_link(k, d, directivity_gain(d, pattern),
                                    attenuation_factor(blocked, body), h, radio));
    }
    r.serving = associate(r.links, deployment, policy);
    r.sinr = sinr(r.serving, r.links, radio);
    return r;
}

namespace {

struct ServingLink {
    std::uint32_t ap = 0;
    double power_w = 0.0;
    double ground_d2 = 0.0;
    bool blocked = false;
};

// Flattened per-cell constants for the per-AP inner loop. Distances are
// compared squared and the body sector test uses a dot product against the
// body direction instead of azimuth differences.
class CellKernel {
public:
    CellKernel(const Deployment& deployment, const AntennaPattern& pattern, const BodyModel& body,
               const RadioConfig& radio)
        : deployment_(deployment)
    {
        const auto aps = deployment.ap_positions();
        xs_.reserve(aps.size());
        ys_.reserve(aps.size());
        for (const Point2& p : aps) {
            xs_.push_back(p.x);
            ys_.push_back(p.y);
            weight_.push_back(1.0);
        }
        // pad to whole lanes with far-away, zero-weight entries
        while (xs_.size() % kLanes != 0) {
            xs_.push_back(1e150);
            ys_.push_back(0.0);
            weight_.push_back(0.0);
        }
        ap_count_ = aps.size();
        h2_ = deployment.ap_height_m() * deployment.ap_height_m();
        main_r2_ = pattern.illumination_radius_m * pattern.illumination_radius_m;
        const double free_r = block_free_radius(deployment.ap_height_m(), body);
        free_r2_ = free_r * free_r;
        // cos of the sector half-angle, 2d / sqrt(4d^2 + w^2); exactly 0 for the half-plane
        cos_half_ = body.dist_to_body_m == 0.0
                        ? 0.0
                        : 2.0 * body.dist_to_body_m /
                              std::hypot(2.0 * body.dist_to_body_m, body.body_width_m);
        main_gain_ = pattern.main_lobe_gain;
        side_gain_ = pattern.side_lobe_gain;
        attenuation_ = body.body_attenuation;
        tx_l0_ = radio.tx_power_w * radio.ref_loss_1m;
        exponent_ = radio.pathloss_exponent;
        noise_w_ = radio.noise_power_w;
    }

    // Sums received power over all APs and finds the serving link under both
    // association rules. APs are processed in blocks with independent lanes so
    // the loop vectorizes; the lane layout is fixed, so the summation order
    // (and therefore the result) does not depend on the CPU or worker count.
    void evaluate(const UePlacement& ue, ServingLink& nearest, ServingLink& strongest,
                  double& total_w, std::vector<double>& power, std::vector<double>& dist2) const
    {
        if (exponent_ == 2.0)
            evaluate_impl<true>(ue, nearest, strongest, total_w, power, dist2);
        else
            evaluate_impl<false>(ue, nearest, strongest, total_w, power, dist2);
    }

    double sinr_of(const ServingLink& serving, double total_w) const
    {
        const double interference = std::max(0.0, total_w - serving.power_w);
        return serving.power_w / (noise_w_ + interference);
    }

    const Deployment& deployment() const { return deployment_; }

private:
    template <bool SquareLaw>
    void evaluate_impl(const UePlacement& ue, ServingLink& nearest, ServingLink& strongest,
                       double& total_w, std::vector<double>& power,
                       std::vector<double>& dist2) const
    {
        const double px = ue.position.x;
        const double py = ue.position.y;
        const double ux = std::cos(ue.body_orientation.azimuth_rad());
        const double uy = std::sin(ue.body_orientation.azimuth_rad());
        const std::size_t padded = xs_.size();
        power.resize(padded);
        dist2.resize(padded);
        double* __restrict pw = power.data();
        double* __restrict dd = dist2.data();
        const double* __restrict xs = xs_.data();
        const double* __restrict ys = ys_.data();
        const double* __restrict wt = weight_.data();

        const double main_r2 = main_r2_;
        const double free_r2 = free_r2_;
        const double cos2 = cos_half_ * cos_half_;
        const double main_gain = main_gain_;
        const double side_gain = side_gain_;
        const double attenuation = attenuation_;
        const double h2 = h2_;
        const double half_exponent = -exponent_ / 2.0;

        using Lane = double __attribute__((vector_size(kLanes * sizeof(double))));
        const auto load = [](const double* at) {
            Lane v;
            std::memcpy(&v, at, sizeof(Lane));
            return v;
        };
        const auto store = [](double* at, Lane v) { std::memcpy(at, &v, sizeof(Lane)); };
        const auto splat = [](double x) { return Lane{x, x, x, x}; };

        const Lane vpx = splat(px), vpy = splat(py), vux = splat(ux), vuy = splat(uy);
        const Lane vmain_r2 = splat(main_r2), vfree_r2 = splat(free_r2), vcos2 = splat(cos2);
        const Lane vmain = splat(main_gain), vside = splat(side_gain);
        const Lane vatt = splat(attenuation), vone = splat(1.0), vzero = splat(0.0);
        const Lane vh2 = splat(h2);

        Lane sum = vzero;
        double best_p = -1.0;
        double best_d2 = INFINITY;
        std::size_t best_p_block = 0;
        std::size_t best_d2_block = 0;

        for (std::size_t b0 = 0; b0 < padded; b0 += kBlock) {
            const std::size_t b1 = std::min(padded, b0 + kBlock);
            Lane block_max = splat(-1.0);
            Lane block_min = splat(INFINITY);
            for (std::size_t k = b0; k < b1; k += kLanes) {
                const Lane dx = load(xs + k) - vpx;
                const Lane dy = load(ys + k) - vpy;
                const Lane d2 = dx * dx + dy * dy;
                const Lane gain = d2 <= vmain_r2 ? vmain : vside;
                const Lane along = dx * vux + dy * vuy;
                const auto shadowed = (d2 > vfree_r2) & (along >= vzero) & (along * along >= vcos2 * d2);
                const Lane body = shadowed ? vatt : vone;
                Lane loss;
                if constexpr (SquareLaw) {
                    loss = vone / (d2 + vh2);
                } else {
                    for (std::size_t j = 0; j < kLanes; ++j) loss[j] = std::pow(d2[j] + h2, half_exponent);
                }
                const Lane p = load(wt + k) * gain * body * loss;
                store(pw + k, p);
                store(dd + k, d2);
                sum += p;
                block_max = p > block_max ? p : block_max;
                block_min = d2 < block_min ? d2 : block_min;
            }
            const double bmax = std::max(std::max(block_max[0], block_max[1]),
                                         std::max(block_max[2], block_max[3]));
            const double bmin = std::min(std::min(block_min[0], block_min[1]),
                                         std::min(block_min[2], block_min[3]));
            if (bmax > best_p) {
                best_p = bmax;
                best_p_block = b0;
            }
            if (bmin < best_d2) {
                best_d2 = bmin;
                best_d2_block = b0;
            }
        }

        // first index inside the winning block gives the lowest-index tie-break
        std::size_t strong_k = best_p_block;
        while (pw[strong_k] != best_p) ++strong_k;
        std::size_t near_k = best_d2_block;
        while (dd[near_k] != best_d2) ++near_k;

        const auto serving = [&](std::size_t k) {
            const double dx = xs[k] - px;
            const double dy = ys[k] - py;
            const double along = dx * ux + dy * uy;
            const bool blocked = dd[k] > free_r2 && along >= 0.0 && along * along >= cos2 * dd[k];
            return ServingLink{static_cast<std::uint32_t>(k), tx_l0_ * pw[k], dd[k], blocked};
        };
        nearest = serving(near_k);
        strongest = serving(strong_k);
        total_w = tx_l0_ * ((sum[0] + sum[1]) + (sum[2] + sum[3]));
    }

    const Deployment& deployment_;
    static constexpr std::size_t kLanes = 4;
    static constexpr std::size_t kBlock = 256;

    std::vector<double> xs_;
    std::vector<double> ys_;
    std::vector<double> weight_;
    std::size_t ap_count_ = 0;
    double h2_ = 0.0;
    double main_r2_ = 0.0;
    double free_r2_ = 0.0;
    double cos_half_ = 0.0;
    double main_gain_ = 0.0;
    double side_gain_ = 0.0;
    double attenuation_ = 1.0;
    double tx_l0_ = 0.0;
    double exponent_ = 2.0;
    double noise_w_ = 0.0;
};

template <typename Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body)
{
    workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), n));
    if (workers <= 1) {
        body(std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
}

}  // namespace

std::vector<SampleSet> run_cell(const Deployment& deployment, const AntennaPattern& pattern,
                                const BodyModel& body, const RadioConfig& radio,
                                std::span<const AssociationPolicy> policies,
                                std::size_t realizations, std::uint64_t stream_seed,
                                unsigned workers)
{
    require(realizations >= 1, "realizations must be at least 1");
    require(!policies.empty(), "at least one association policy is required");

    const CellKernel kernel(deployment, pattern, body, radio);

    std::vector<SampleSet> out(policies.size());
    for (std::size_t p = 0; p < policies.size(); ++p) {
        out[p].resize(realizations);
        out[p].key = ConfigKey{deployment.inter_site_distance_m(), pattern.beamwidth_rad,
                               Scenario::Hand, policies[p], stream_seed};
    }

    parallel_for(realizations, resolve_worker_count(workers), [&](std::size_t begin, std::size_t end) {
        std::vector<double> power;
        std::vector<double> dist2;
        for (std::size_t i = begin; i < end; ++i) {
            Rng rng = make_stream(stream_seed, i);
            const UePlacement ue = sample_ue_placement(deployment, rng);
            ServingLink nearest;
            ServingLink strongest;
            double total = 0.0;
            kernel.evaluate(ue, nearest, strongest, total, power, dist2);
            for (std::size_t p = 0; p < policies.size(); ++p) {
                const ServingLink& s =
                    policies[p] == AssociationPolicy::MinDistance3d ? nearest : strongest;
                SampleSet& set = out[p];
                set.sinr_values[i] = kernel.sinr_of(s, total);
                set.serving_ap[i] = s.ap;
                set.serving_blocked[i] = s.blocked ? 1 : 0;
                set.serving_ground_distance_m[i] = std::sqrt(s.ground_d2);
            }
        }
    });
    return out;
}

SampleSet run_cell(const Deployment& deployment, const AntennaPattern& pattern,
                   const BodyModel& body, const RadioConfig& radio, AssociationPolicy policy,
                   std::size_t realizations, std::uint64_t stream_seed, unsigned workers)
{
    const AssociationPolicy policies[] = {policy};
    return std::move(
        run_cell(deployment, pattern, body, radio, policies, realizations, stream_seed, workers)
            .front());
}

SweepResult run_sweep(const RunSpec& spec, std::span<const ScenarioConfig> scenarios,
                      unsigned workers)
{
    spec.validate();
    require(!scenarios.empty(), "at least one scenario is required");
    for (const ScenarioConfig& sc : scenarios) sc.validate();

    SweepResult result;
    for (const ScenarioConfig& sc : scenarios) {
        const BodyModel body = sc.body();
        const RadioConfig radio = sc.radio();
        for (std::size_t di = 0; di < spec.d_s_m.size(); ++di) {
            const double d_s = spec.d_s_m[di];
            Deployment deployment;
            try {
                deployment = Deployment::hex_grid(d_s, sc.area_side_m, sc.ap_height_m);
            } catch (const DomainError& e) {
                throw DomainError("invalid grid point d_s = " + std::to_string(d_s) + " m: " + e.what());
            }
            const double area = cell_area(d_s);
            for (std::size_t ti = 0; ti < spec.theta_bw_rad.size(); ++ti) {
                const double theta = spec.theta_bw_rad[ti];
                AntennaPattern pattern;
                try {
                    pattern = sc.pattern(theta);
                } catch (const DomainError& e) {
                    throw DomainError("invalid grid point theta_bw = " +
                                      std::to_string(rad_to_deg(theta)) + " deg: " + e.what());
                }
                const std::uint64_t seed = cell_seed(spec.master_seed, di, ti);
                const auto sets = run_cell(deployment, pattern, body, radio, spec.policies,
                                           spec.realizations, seed, workers);
                for (std::size_t p = 0; p < spec.policies.size(); ++p) {
                    const double cell_ase = ase(sets[p], area);
                    for (double threshold : spec.threshold_db) {
                        result.rows.push_back(SweepRow{d_s, theta, threshold, sc.scenario,
                                                       spec.policies[p], coverage(sets[p], threshold),
                                                       cell_ase, spec.realizations, seed});
                    }
                }
            }
        }
    }
    result.sort();
    return result;
}

SweepResult run_sweep(const RunSpec& spec, const ScenarioConfig& scenario, unsigned workers)
{
    return run_sweep(spec, std::span<const ScenarioConfig>(&scenario, 1), workers);
}

}  // namespace mmw
