#include "entroute/topology.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "entroute/rng.hpp"

namespace entroute {

namespace {

void validate(const TopologyConfig& c) {
    if (!(c.area_side > 0.0)) throw std::invalid_argument("area_side must be positive");
    if (c.num_switches < 1) throw std::invalid_argument("need at least one switch");
    if (c.num_pairs < 1) throw std::invalid_argument("need at least one pair");
    if (!(c.avg_degree > 0.0)) throw std::invalid_argument("avg_degree must be positive");
    if (c.qubits_per_switch <= 0 || c.qubits_per_switch % 2 != 0)
        throw std::invalid_argument("qubits_per_switch must be a positive even number");
    if (!(c.swap_prob >= 0.0 && c.swap_prob <= 1.0))
        throw std::invalid_argument("swap_prob must be in [0, 1]");
    if (!(c.single_link_target_prob > 0.0 && c.single_link_target_prob < 1.0))
        throw std::invalid_argument("single_link_target_prob must be in (0, 1)");
    if (!(c.edge_cutoff_factor > 0.0)) throw std::invalid_argument("edge_cutoff_factor must be positive");
    if (c.alpha_reference_length < 0.0) throw std::invalid_argument("alpha reference must be >= 0");
    if (c.max_retries < 1) throw std::invalid_argument("max_retries must be positive");
}

struct Point {
    double x, y;
};

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Expected mean degree for a given beta over the realized placement; edge
// probability is min(1, beta * exp(-d / cutoff)) for candidate pairs.
double expected_degree(const std::vector<double>& decay, double beta, int n) {
    double total = 0.0;
    for (double d : decay) total += std::min(1.0, beta * d);
    return 2.0 * total / n;
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(n, false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int visited = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++visited;
                frontier.push(v);
            }
    }
    return visited == n;
}

}  // namespace

double calibrate_alpha(double target_prob, double reference_length) {
    if (!(target_prob > 0.0 && target_prob < 1.0))
        throw std::invalid_argument("target probability must be in (0, 1)");
    if (!(reference_length > 0.0)) throw std::invalid_argument("reference length must be positive");
    return -std::log(target_prob) / reference_length;
}

double edge_length_cutoff(const TopologyConfig& config) {
    return config.edge_cutoff_factor * config.area_side / std::sqrt(static_cast<double>(config.num_switches));
}

NetworkGraph generate_topology(const TopologyConfig& config) {
    validate(config);
    int n = config.num_switches;
    int m = config.num_pairs;
    double cutoff = edge_length_cutoff(config);
    double reference = config.alpha_reference_length > 0.0 ? config.alpha_reference_length : cutoff;
    double alpha = calibrate_alpha(config.single_link_target_prob, reference);

    for (int attempt = 0; attempt < config.max_retries; ++attempt) {
        Rng rng(substream_seed(config.rng_seed, static_cast<std::uint64_t>(attempt)));

        std::vector<Point> sw(n);
        for (Point& p : sw) {
            p.x = rng.uniform(0.0, config.area_side);
            p.y = rng.uniform(0.0, config.area_side);
        }

        // candidate switch pairs inside the locality cutoff
        std::vector<std::pair<int, int>> cand;
        std::vector<double> decay;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double d = dist(sw[i], sw[j]);
                if (d <= cutoff) {
                    cand.emplace_back(i, j);
                    decay.push_back(std::exp(-d / cutoff));
                }
            }

        // bisect beta so the expected mean degree over this placement hits
        // the target exactly; sampling noise is caught by the check below
        double hi = 1.0;
        while (expected_degree(decay, hi, n) < config.avg_degree && hi < 1e18) hi *= 2.0;
        double lo = 0.0;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (expected_degree(decay, mid, n) < config.avg_degree)
                lo = mid;
            else
                hi = mid;
        }
        double beta = hi;

        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < cand.size(); ++k)
            if (rng.bernoulli(std::min(1.0, beta * decay[k]))) edges.push_back(cand[k]);

        double realized = n > 0 ? 2.0 * static_cast<double>(edges.size()) / n : 0.0;
        bool degree_ok = std::abs(realized - config.avg_degree) <= 0.1 * config.avg_degree;
        // a target above what the candidate set supports can never pass on
        // resampling; accept the densest graph the locality rule allows
        if (expected_degree(decay, 1e18, n) < config.avg_degree * 0.9) degree_ok = true;
        if (n > 1 && (!degree_ok || !connected(n, edges))) continue;

        NetworkGraph g(alpha, config.swap_prob);
        for (int i = 0; i < n; ++i) g.add_switch(i, sw[i].x, sw[i].y, config.qubits_per_switch);
        for (auto [a, b] : edges) g.add_link(a, b, std::max(dist(sw[a], sw[b]), 1e-12));

        for (int u = 0; u < 2 * m; ++u) {
            Point p{rng.uniform(0.0, config.area_side), rng.uniform(0.0, config.area_side)};
            NodeId id = n + u;
            g.add_user(id, p.x, p.y);
            int nearest = 0;
            double best = dist(p, sw[0]);
            for (int i = 1; i < n; ++i) {
                double d = dist(p, sw[i]);
                if (d < best) {
                    best = d;
                    nearest = i;
                }
            }
            g.add_link(id, nearest, std::max(best, 1e-12));
        }
        for (int pair = 0; pair < m; ++pair) g.add_pair(n + 2 * pair, n + 2 * pair + 1);
        return g;
    }
    throw GenerationFailedError(config.rng_seed,
                                "no connected topology within " + std::to_string(config.max_retries) +
                                    " attempts (seed " + std::to_string(config.rng_seed) + ")");
}

}  // namespace entroute
