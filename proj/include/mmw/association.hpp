#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "mmw/channel.hpp"
#include "mmw/deployment.hpp"

namespace mmw {

enum class AssociationPolicy {
    MinDistance3d,
    MaxReceivedPower,
};

std::string_view to_string(AssociationPolicy policy);
AssociationPolicy parse_association_policy(std::string_view text);  // "min-dist" | "max-power"

/// Serving link for the given policy, as a position in links. Ties go to the
/// lowest position.
std::size_t associate(std::span<const LinkState> links, const Deployment& deployment,
                      AssociationPolicy policy);

/// Minimum-distance association on ground distance alone. All APs share one
/// height, so this must agree with the 3-D rule.
std::size_t associate_min_ground_distance(std::span<const LinkState> links);

}  // namespace mmw
