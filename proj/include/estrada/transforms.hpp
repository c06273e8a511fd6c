#pragma once

#include "estrada/graph.hpp"

#include <vector>

namespace estrada {

/// A vertex v whose neighbours are p >= 1 pendant vertices plus exactly one
/// other vertex u. Moving the pendants from v to u is the sigma
/// transformation.
struct SigmaSite {
    vertex_t v = -1;
    vertex_t u = -1;
    std::vector<vertex_t> pendants; // ascending

    friend bool operator==(const SigmaSite&, const SigmaSite&) = default;
};

/// Every sigma site of g, ordered by v. Empty for stars.
std::vector<SigmaSite> find_sigma_sites(const Graph& g);

/// Removes v-v_i and adds u-v_i for every pendant v_i. The site is checked
/// against g first; a stale or invalid site throws invalid_parameter.
Graph sigma_transform(const Graph& g, const SigmaSite& site);

/// T_0 = t, ..., T_k = star. Each step transforms at the parent of a deepest
/// leaf, with depths measured from the tree center (the smaller index when
/// bicentral) and ties broken by the smallest parent index.
std::vector<Graph> sigma_chain_to_star(const Graph& t);

} // namespace estrada
