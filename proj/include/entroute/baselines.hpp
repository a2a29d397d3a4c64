#pragma once

#include "entroute/graph.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/step2.hpp"

namespace entroute {

enum class RouteMetric { expected_throughput, sum_inverse_p, hop_count };

// Ranking rule for the greedy engine. expected_throughput is maximized
// (FER); the sum of inverse link probabilities (Q-PASS) and the hop count
// (B1) are minimized.
struct PathMetric {
    RouteMetric kind = RouteMetric::expected_throughput;
    bool maximize = true;

    static PathMetric for_kind(RouteMetric kind);
    double value(const RoutePath& path, const NetworkGraph& g) const;
};

struct GreedyOptions {
    // false: re-rank after every single channel; true: load the chosen path
    // to saturation before re-ranking
    bool saturate_path = false;
};

// Repeatedly assigns one channel to the metric-best feasible (pair, path)
// candidate until none fits. Ties fall to the lowest pair, then the lowest
// path index. A pair may accumulate several paths and channels.
Step2Plan greedy_route(const NetworkGraph& g, const PathSetCatalog& catalog, const PathMetric& metric,
                       const GreedyOptions& options = {});

}  // namespace entroute
