#include "entroute/baselines.hpp"

#include "entroute/capacity.hpp"

namespace entroute {

PathMetric PathMetric::for_kind(RouteMetric kind) {
    return PathMetric{kind, kind == RouteMetric::expected_throughput};
}

double PathMetric::value(const RoutePath& path, const NetworkGraph& g) const {
    switch (kind) {
        case RouteMetric::expected_throughput:
            return path.success_prob;
        case RouteMetric::sum_inverse_p: {
            double total = 0.0;
            for (std::size_t i = 1; i < path.nodes.size(); ++i)
                total += 1.0 / g.find_link(path.nodes[i - 1], path.nodes[i])->success_prob;
            return total;
        }
        case RouteMetric::hop_count:
            return static_cast<double>(path.hop_count);
    }
    return 0.0;
}

Step2Plan greedy_route(const NetworkGraph& g, const PathSetCatalog& catalog, const PathMetric& metric,
                       const GreedyOptions& options) {
    Step2Plan plan;
    plan.channels.assign(catalog.all_paths.size(), 0);

    std::vector<double> score(catalog.all_paths.size());
    for (std::size_t i = 0; i < score.size(); ++i) score[i] = metric.value(catalog.all_paths[i], g);

    CapacityLedger ledger(g);
    for (;;) {
        int best = -1;
        for (std::size_t i = 0; i < catalog.all_paths.size(); ++i) {
            const RoutePath& p = catalog.all_paths[i];
            if (p.nodes.size() < 3) continue;  // no switch to hold the channel
            if (!ledger.can_route(p)) continue;
            if (best < 0) {
                best = static_cast<int>(i);
                continue;
            }
            bool better = metric.maximize ? score[i] > score[best] : score[i] < score[best];
            if (better) best = static_cast<int>(i);
            // catalog order is (pair, path), so ties keep the earlier index
        }
        if (best < 0) break;
        const RoutePath& p = catalog.all_paths[best];
        do {
            ledger.commit(p);
            ++plan.channels[best];
            plan.additional_throughput += p.success_prob;
        } while (options.saturate_path && ledger.can_route(p));
    }
    plan.total_throughput = plan.additional_throughput;
    return plan;
}

}  // namespace entroute
