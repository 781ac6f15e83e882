#include "mmw/association.hpp"

#include <cmath>
#include <string>

namespace mmw {

std::string_view to_string(AssociationPolicy policy)
{
    switch (policy) {
    case AssociationPolicy::MinDistance3d: return "min-dist";
    case AssociationPolicy::MaxReceivedPower: return "max-power";
    }
    return "unknown";
}

AssociationPolicy parse_association_policy(std::string_view text)
{
    if (text == "min-dist") return AssociationPolicy::MinDistance3d;
    if (text == "max-power") return AssociationPolicy::MaxReceivedPower;
    throw DomainError("unknown association policy '" + std::string(text) +
                      "' (expected min-dist or max-power)");
}

std::size_t associate(std::span<const LinkState> links, const Deployment& deployment,
                      AssociationPolicy policy)
{
    require(!links.empty(), "association needs at least one link");

    std::size_t best = 0;
    if (policy == AssociationPolicy::MinDistance3d) {
        const double h = deployment.ap_height_m();
        double best_r = std::hypot(links[0].ground_distance_m, h);
        for (std::size_t k = 1; k < links.size(); ++k) {
            const double r = std::hypot(links[k].ground_distance_m, h);
            if (r < best_r) {
                best = k;
                best_r = r;
            }
        }
    } else {
        double best_p = links[0].received_power_w;
        for (std::size_t k = 1; k < links.size(); ++k) {
            if (links[k].received_power_w > best_p) {
                best = k;
                best_p = links[k].received_power_w;
            }
        }
    }
    return best;
}

std::size_t associate_min_ground_distance(std::span<const LinkState> links)
{
    require(!links.empty(), "association needs at least one link");
    std::size_t best = 0;
    for (std::size_t k = 1; k < links.size(); ++k) {
        if (links[k].ground_distance_m < links[best].ground_distance_m) best = k;
    }
    return best;
}

}  // namespace mmw
