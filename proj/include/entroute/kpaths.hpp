#pragma once

#include <vector>

#include "entroute/graph.hpp"

namespace entroute {

// Reduced path catalog: for each pair its shortest-distance candidate paths.
// Distance is hop count; ties are broken by total length, then by the node
// sequence, which makes the order a total order over distinct simple paths.
struct PathSetCatalog {
    std::vector<RoutePath> all_paths;         // grouped by pair, sorted within each pair
    std::vector<std::vector<int>> per_pair;   // pair_id -> indices into all_paths

    int num_pairs() const { return static_cast<int>(per_pair.size()); }
    bool pair_unservable(int pair_id) const { return per_pair[pair_id].empty(); }
};

// Strict ordering (hop_count, total_length, nodes).
bool path_order_less(const RoutePath& a, const RoutePath& b);

// Up to k loopless shortest-distance paths between two nodes, sorted by the
// catalog order. Returns fewer than k when fewer exist; an unreachable
// destination yields an empty list.
std::vector<RoutePath> yen_k_shortest(const NetworkGraph& g, NodeId source, NodeId destination, int k);

// Builds the catalog: M^2 Yen candidates per pair, trimmed so that every pair
// keeps its min(M, available) shortest paths. Total size is at most M^2.
// Pairs without any path keep an empty list (they can never be served).
PathSetCatalog selective_paths(const NetworkGraph& g, const std::vector<UserPair>& pairs);

}  // namespace entroute
