#include "entroute/kpaths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace entroute {

bool path_order_less(const RoutePath& a, const RoutePath& b) {
    if (a.hop_count != b.hop_count) return a.hop_count < b.hop_count;
    if (a.total_length != b.total_length) return a.total_length < b.total_length;
    return a.nodes < b.nodes;
}

namespace {

// absolute slack when matching float path lengths assembled in different orders
constexpr double kLenEps = 1e-6;

struct EdgeBan {
    std::set<std::pair<NodeId, NodeId>> edges;  // ordered pairs (min, max)

    bool banned(NodeId a, NodeId b) const { return edges.count(std::minmax(a, b)) != 0; }
};

struct CompositeDist {
    int hops = std::numeric_limits<int>::max();
    double length = std::numeric_limits<double>::infinity();

    bool reachable() const { return hops != std::numeric_limits<int>::max(); }
};

bool dist_less(int h1, double l1, int h2, double l2) {
    if (h1 != h2) return h1 < h2;
    return l1 < l2;
}

// Shortest (hops, length) distances from `target` to every allowed node.
std::unordered_map<NodeId, CompositeDist> reverse_distances(const NetworkGraph& g, NodeId target,
                                                            const std::unordered_set<NodeId>& banned_nodes,
                                                            const EdgeBan& banned_edges) {
    std::unordered_map<NodeId, CompositeDist> dist;
    using Item = std::tuple<int, double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[target] = CompositeDist{0, 0.0};
    heap.emplace(0, 0.0, target);
    while (!heap.empty()) {
        auto [h, len, u] = heap.top();
        heap.pop();
        auto cur = dist[u];
        if (h != cur.hops || len != cur.length) continue;  // stale entry
        for (NodeId v : g.neighbors(u)) {
            if (banned_nodes.count(v) || banned_edges.banned(u, v)) continue;
            double w = g.find_link(u, v)->length;
            int nh = h + 1;
            double nl = len + w;
            auto it = dist.find(v);
            if (it == dist.end() || dist_less(nh, nl, it->second.hops, it->second.length)) {
                dist[v] = CompositeDist{nh, nl};
                heap.emplace(nh, nl, v);
            }
        }
    }
    return dist;
}

// Minimal (hops, length) path from source to target, lexicographically
// smallest among the optima: walk forward from the source, always taking the
// smallest neighbor that stays on some optimal continuation.
std::vector<NodeId> shortest_path(const NetworkGraph& g, NodeId source, NodeId target,
                                  const std::unordered_set<NodeId>& banned_nodes,
                                  const EdgeBan& banned_edges) {
    if (banned_nodes.count(source)) return {};
    auto back = reverse_distances(g, target, banned_nodes, banned_edges);
    auto it = back.find(source);
    if (it == back.end()) return {};

    std::vector<NodeId> path{source};
    NodeId u = source;
    while (u != target) {
        CompositeDist du = back.at(u);
        NodeId next = -1;
        for (NodeId v : g.neighbors(u)) {  // ascending ids
            if (banned_nodes.count(v) || banned_edges.banned(u, v)) continue;
            auto dv = back.find(v);
            if (dv == back.end()) continue;
            if (dv->second.hops + 1 != du.hops) continue;
            double w = g.find_link(u, v)->length;
            if (std::abs(dv->second.length + w - du.length) > kLenEps) continue;
            next = v;
            break;
        }
        if (next < 0) return {};  // numeric dead end; cannot happen on consistent data
        path.push_back(next);
        u = next;
    }
    return path;
}

struct PathLess {
    bool operator()(const RoutePath& a, const RoutePath& b) const { return path_order_less(a, b); }
};

}  // namespace

std::vector<RoutePath> yen_k_shortest(const NetworkGraph& g, NodeId source, NodeId destination, int k) {
    if (source == destination) throw std::invalid_argument("source and destination must differ");
    if (!g.has_node(source) || !g.has_node(destination))
        throw std::invalid_argument("endpoint not in graph");
    if (k <= 0) throw std::invalid_argument("k must be positive");

    std::vector<RoutePath> accepted;
    std::set<std::vector<NodeId>> known;  // sequences in accepted or candidates
    std::set<RoutePath, PathLess> candidates;

    auto first = shortest_path(g, source, destination, {}, {});
    if (first.empty()) return accepted;
    accepted.push_back(make_route_path(g, -1, first));
    known.insert(first);

    while (static_cast<int>(accepted.size()) < k) {
        const std::vector<NodeId>& prev = accepted.back().nodes;
        for (std::size_t spur_idx = 0; spur_idx + 1 < prev.size(); ++spur_idx) {
            NodeId spur = prev[spur_idx];
            std::vector<NodeId> root(prev.begin(), prev.begin() + spur_idx + 1);

            EdgeBan bans;
            for (const RoutePath& p : accepted) {
                if (p.nodes.size() > spur_idx + 1 &&
                    std::equal(root.begin(), root.end(), p.nodes.begin()))
                    bans.edges.insert(std::minmax(p.nodes[spur_idx], p.nodes[spur_idx + 1]));
            }
            std::unordered_set<NodeId> banned_nodes(root.begin(), root.end() - 1);

            auto spur_path = shortest_path(g, spur, destination, banned_nodes, bans);
            if (spur_path.empty()) continue;
            std::vector<NodeId> total(root.begin(), root.end() - 1);
            total.insert(total.end(), spur_path.begin(), spur_path.end());
            if (known.insert(total).second) candidates.insert(make_route_path(g, -1, total));
        }
        if (candidates.empty()) break;
        accepted.push_back(*candidates.begin());
        candidates.erase(candidates.begin());
    }
    std::sort(accepted.begin(), accepted.end(), path_order_less);
    return accepted;
}

PathSetCatalog selective_paths(const NetworkGraph& g, const std::vector<UserPair>& pairs) {
    int num_pairs = static_cast<int>(pairs.size());
    if (num_pairs < 1) throw std::invalid_argument("need at least one pair");

    // M^2 candidates per pair; every pair then keeps its M shortest, which
    // also caps the catalog at M^2 paths overall.
    int per_pair_yen = num_pairs * num_pairs;
    PathSetCatalog catalog;
    catalog.per_pair.resize(num_pairs);
    for (const UserPair& pair : pairs) {
        auto paths = yen_k_shortest(g, pair.source, pair.destination, per_pair_yen);
        if (static_cast<int>(paths.size()) > num_pairs) paths.resize(num_pairs);
        for (RoutePath& p : paths) {
            p.pair_id = pair.pair_id;
            catalog.per_pair[pair.pair_id].push_back(static_cast<int>(catalog.all_paths.size()));
            catalog.all_paths.push_back(std::move(p));
        }
    }
    return catalog;
}

}  // namespace entroute
