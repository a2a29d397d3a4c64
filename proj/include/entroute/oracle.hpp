#pragma once

#include <cstdint>
#include <vector>

#include "entroute/graph.hpp"
#include "entroute/kpaths.hpp"

namespace entroute {

// Exhaustive references for tiny instances. Guards throw InstanceTooLargeError
// instead of sampling; callers must pick instances inside the guard.

// All simple paths between two nodes, sorted by the catalog order.
std::vector<RoutePath> enumerate_simple_paths(const NetworkGraph& g, NodeId source, NodeId destination,
                                              std::uint64_t guard = 1'000'000);

struct Step1Oracle {
    int best_count = 0;
    std::vector<int> selection;  // per pair: index into catalog.all_paths or -1
};

// Enumerates every at-most-one-path-per-pair selection; guard bounds the
// product over pairs of (paths + 1). The witness is the lexicographically
// smallest maximizer (pairs in order, no-path before lower path indices).
Step1Oracle brute_force_step1(const PathSetCatalog& catalog, const NetworkGraph& g,
                              std::uint64_t guard = 1'000'000);

struct Step2Oracle {
    double best_throughput = 0.0;
    std::vector<int> channels;  // parallel to path_indices
};

// Enumerates every integer channel vector within the per-path residual
// bounds; guard bounds the product of (bound + 1).
Step2Oracle brute_force_step2(const PathSetCatalog& catalog, const std::vector<int>& path_indices,
                              const NetworkGraph& g, std::uint64_t guard = 1'000'000);

}  // namespace entroute
