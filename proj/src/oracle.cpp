#include "entroute/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "entroute/capacity.hpp"

namespace entroute {

namespace {

void dfs_paths(const NetworkGraph& g, NodeId u, NodeId destination, std::vector<NodeId>& stack,
               std::set<NodeId>& visited, std::vector<RoutePath>& out, std::uint64_t guard) {
    if (u == destination) {
        if (out.size() >= guard) throw InstanceTooLargeError("simple path count exceeds guard");
        out.push_back(make_route_path(g, -1, stack));
        return;
    }
    for (NodeId v : g.neighbors(u)) {
        if (visited.count(v)) continue;
        visited.insert(v);
        stack.push_back(v);
        dfs_paths(g, v, destination, stack, visited, out, guard);
        stack.pop_back();
        visited.erase(v);
    }
}

}  // namespace

std::vector<RoutePath> enumerate_simple_paths(const NetworkGraph& g, NodeId source, NodeId destination,
                                              std::uint64_t guard) {
    if (source == destination) throw std::invalid_argument("source and destination must differ");
    if (!g.has_node(source) || !g.has_node(destination))
        throw std::invalid_argument("endpoint not in graph");
    std::vector<RoutePath> out;
    std::vector<NodeId> stack{source};
    std::set<NodeId> visited{source};
    dfs_paths(g, source, destination, stack, visited, out, guard);
    std::sort(out.begin(), out.end(), path_order_less);
    return out;
}

namespace {

struct Step1Search {
    const PathSetCatalog& cat;
    CapacityLedger ledger;
    std::vector<int> choice;
    Step1Oracle best;
    int served = 0;

    Step1Search(const PathSetCatalog& c, const NetworkGraph& g) : cat(c), ledger(g) {
        choice.assign(cat.num_pairs(), -1);
        best.best_count = -1;
    }

    void recurse(int m) {
        if (m == cat.num_pairs()) {
            if (served > best.best_count) {
                best.best_count = served;
                best.selection = choice;
            }
            return;
        }
        choice[m] = -1;
        recurse(m + 1);
        for (int idx : cat.per_pair[m]) {
            const RoutePath& p = cat.all_paths[idx];
            if (!ledger.can_route(p)) continue;
            ledger.commit(p);
            choice[m] = idx;
            ++served;
            recurse(m + 1);
            --served;
            choice[m] = -1;
            ledger.release(p);
        }
    }
};

}  // namespace

Step1Oracle brute_force_step1(const PathSetCatalog& catalog, const NetworkGraph& g, std::uint64_t guard) {
    std::uint64_t combos = 1;
    for (const auto& indices : catalog.per_pair) {
        combos *= static_cast<std::uint64_t>(indices.size()) + 1;
        if (combos > guard) throw InstanceTooLargeError("step-1 enumeration exceeds guard");
    }
    Step1Search search(catalog, g);
    search.recurse(0);
    // self check: the witness must be feasible
    CapacityLedger check(g);
    for (int idx : search.best.selection)
        if (idx >= 0) {
            if (!check.can_route(catalog.all_paths[idx]))
                throw std::logic_error("oracle produced an infeasible witness");
            check.commit(catalog.all_paths[idx]);
        }
    return search.best;
}

namespace {

struct Step2Search {
    const PathSetCatalog& cat;
    const std::vector<int>& paths;
    CapacityLedger ledger;
    std::vector<int> channels;
    std::vector<int> bounds;
    double value = 0.0;
    Step2Oracle best;

    Step2Search(const PathSetCatalog& c, const std::vector<int>& p, const NetworkGraph& g)
        : cat(c), paths(p), ledger(g) {
        channels.assign(paths.size(), 0);
        best.best_throughput = -1.0;
    }

    void recurse(std::size_t v) {
        if (v == paths.size()) {
            if (value > best.best_throughput + 1e-12) {
                best.best_throughput = value;
                best.channels = channels;
            }
            return;
        }
        const RoutePath& p = cat.all_paths[paths[v]];
        for (int c = 0; c <= bounds[v]; ++c) {
            if (c > 0) {
                if (!ledger.can_route(p)) break;
                ledger.commit(p);
                value += p.success_prob;
            }
            channels[v] = c;
            recurse(v + 1);
        }
        ledger.release(p, channels[v]);
        value -= channels[v] * p.success_prob;
        channels[v] = 0;
    }
};

}  // namespace

Step2Oracle brute_force_step2(const PathSetCatalog& catalog, const std::vector<int>& path_indices,
                              const NetworkGraph& g, std::uint64_t guard) {
    Step2Search search(catalog, path_indices, g);
    std::uint64_t combos = 1;
    for (int idx : path_indices) {
        const RoutePath& p = catalog.all_paths[idx];
        int cap = std::numeric_limits<int>::max();
        for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i)
            cap = std::min(cap, g.residual_qubits(p.nodes[i]) / 2);
        if (p.nodes.size() < 3) throw std::invalid_argument("path without an intermediate switch");
        search.bounds.push_back(cap);
        combos *= static_cast<std::uint64_t>(cap) + 1;
        if (combos > guard) throw InstanceTooLargeError("step-2 enumeration exceeds guard");
    }
    search.recurse(0);
    if (search.best.best_throughput < 0.0) {
        search.best.best_throughput = 0.0;
        search.best.channels.assign(path_indices.size(), 0);
    }
    // self check
    CapacityLedger check(g);
    for (std::size_t v = 0; v < path_indices.size(); ++v) {
        const RoutePath& p = catalog.all_paths[path_indices[v]];
        for (int c = 0; c < search.best.channels[v]; ++c) {
            if (!check.can_route(p)) throw std::logic_error("oracle produced an infeasible witness");
            check.commit(p);
        }
    }
    return search.best;
}

}  // namespace entroute
