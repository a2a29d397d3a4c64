#include "entroute/step1.hpp"

#include <algorithm>
#include <map>

#include "entroute/capacity.hpp"

namespace entroute {

namespace {

constexpr double kOneTol = 1e-9;

struct Step1Search {
    const PathSetCatalog& cat;
    const std::vector<double>& x;  // fractional value per catalog path
    CapacityLedger ledger;
    std::vector<bool> marked;      // pair resolved on the current line
    std::vector<int> chosen;       // pair -> committed path or -1
    int served = 0;
    std::vector<int> best_chosen;
    int best_served = -1;
    Step1SearchStats stats;

    Step1Search(const PathSetCatalog& c, const std::vector<double>& values, const NetworkGraph& g)
        : cat(c), x(values), ledger(g) {
        marked.assign(cat.num_pairs(), false);
        chosen.assign(cat.num_pairs(), -1);
    }

    bool feasible(int path_idx) const { return ledger.can_route(cat.all_paths[path_idx]); }

    void snapshot_if_better() {
        ++stats.leaves;
        if (served > best_served) {
            best_served = served;
            best_chosen = chosen;
        }
    }

    // Largest fractional value over the feasible paths of unmarked pairs;
    // ties fall to the lowest pair, then lowest path index.
    int select_next_pair() const {
        int best_pair = -1;
        double best_value = -1.0;
        for (int m = 0; m < cat.num_pairs(); ++m) {
            if (marked[m]) continue;
            for (int idx : cat.per_pair[m]) {
                if (!feasible(idx)) continue;
                // strictly-larger wins, so ties stay with the lowest pair index
                if (x[idx] > best_value + kOneTol) {
                    best_value = x[idx];
                    best_pair = m;
                }
            }
        }
        return best_pair;
    }

    void continue_search() {
        int unmarked = static_cast<int>(std::count(marked.begin(), marked.end(), false));
        if (served + unmarked <= best_served) return;  // cannot strictly improve
        int m = select_next_pair();
        if (m < 0) {
            snapshot_if_better();
            return;
        }
        std::vector<NodeId> prefix{cat.all_paths[cat.per_pair[m].front()].nodes.front()};
        search_pair(m, prefix);
    }

    void search_pair(int m, std::vector<NodeId>& prefix) {
        ++stats.nodes;
        std::vector<int> cand;
        for (int idx : cat.per_pair[m]) {
            const RoutePath& p = cat.all_paths[idx];
            if (p.nodes.size() < prefix.size()) continue;
            if (!std::equal(prefix.begin(), prefix.end(), p.nodes.begin())) continue;
            if (feasible(idx)) cand.push_back(idx);
        }

        if (cand.size() <= 1) {
            bool committed = false;
            if (cand.size() == 1) {
                chosen[m] = cand.front();
                ledger.commit(cat.all_paths[cand.front()]);
                ++served;
                committed = true;
            }
            marked[m] = true;
            continue_search();
            marked[m] = false;
            if (committed) {
                ledger.release(cat.all_paths[cand.front()]);
                chosen[m] = -1;
                --served;
            }
            return;
        }

        // extend along the shared part, then split on the first divergence
        std::size_t pos = prefix.size();
        for (;; ++pos) {
            NodeId first = cat.all_paths[cand.front()].nodes[pos];
            bool all_same = true;
            for (int idx : cand)
                if (cat.all_paths[idx].nodes[pos] != first) {
                    all_same = false;
                    break;
                }
            if (!all_same) break;
        }
        ++stats.divergences;
        std::map<NodeId, double> mass;  // next node -> accumulated fractional value
        for (int idx : cand) mass[cat.all_paths[idx].nodes[pos]] += x[idx];
        NodeId top1 = -1, top2 = -1;
        double m1 = -1.0, m2 = -1.0;
        for (const auto& [node, value] : mass) {  // ascending node id; ties keep the smaller id
            if (value > m1) {
                top2 = top1;
                m2 = m1;
                top1 = node;
                m1 = value;
            } else if (value > m2) {
                top2 = node;
                m2 = value;
            }
        }
        std::vector<NodeId> shared(cat.all_paths[cand.front()].nodes.begin(),
                                   cat.all_paths[cand.front()].nodes.begin() + pos);
        for (NodeId branch : {top1, top2}) {
            std::vector<NodeId> next(shared);
            next.push_back(branch);
            search_pair(m, next);
        }
    }
};

std::vector<double> checked_values(const FractionalSolution& fractional, const PathSetCatalog& catalog) {
    if (fractional.status != LpStatus::optimal)
        throw std::invalid_argument("fractional solution is not optimal");
    if (fractional.values.size() != catalog.all_paths.size())
        throw std::invalid_argument("fractional solution does not match the catalog");
    std::vector<double> x(fractional.values);
    for (double& v : x) {
        if (v < -kOneTol) throw std::invalid_argument("fractional value below zero");
        if (v < 0.0) v = 0.0;
    }
    return x;
}

Step1Plan finish(const Step1Search& search, double lp_optimum) {
    Step1Plan plan;
    plan.selected = search.best_chosen;
    plan.served_count = search.best_served;
    plan.integral_value = search.best_served;
    plan.lp_optimum = lp_optimum;
    return plan;
}

}  // namespace

Step1Plan recover_integer_step1(const FractionalSolution& fractional, const PathSetCatalog& catalog,
                                const NetworkGraph& g, Step1SearchStats* stats) {
    std::vector<double> x = checked_values(fractional, catalog);
    Step1Search search(catalog, x, g);

    // commit every x ~ 1 path; they are jointly feasible in any order
    for (int m = 0; m < catalog.num_pairs(); ++m) {
        for (int idx : catalog.per_pair[m]) {
            if (x[idx] >= 1.0 - kOneTol && search.feasible(idx)) {
                search.chosen[m] = idx;
                search.ledger.commit(catalog.all_paths[idx]);
                ++search.served;
                search.marked[m] = true;
                break;
            }
        }
    }
    search.best_served = search.served;
    search.best_chosen = search.chosen;
    search.continue_search();
    if (stats) *stats = search.stats;
    return finish(search, fractional.objective_value);
}

Step1Plan branch_and_price_step1(const std::vector<NodeId>& prefix, int pair_id,
                                 const std::vector<double>& fractional_values,
                                 const Step1Plan& committed, const PathSetCatalog& catalog,
                                 const NetworkGraph& g, Step1SearchStats* stats) {
    if (pair_id < 0 || pair_id >= catalog.num_pairs()) throw std::invalid_argument("unknown pair id");
    if (fractional_values.size() != catalog.all_paths.size())
        throw std::invalid_argument("fractional values do not match the catalog");
    Step1Search search(catalog, fractional_values, g);
    for (int m = 0; m < catalog.num_pairs(); ++m) {
        int idx = m < static_cast<int>(committed.selected.size()) ? committed.selected[m] : -1;
        if (idx < 0) continue;
        search.chosen[m] = idx;
        search.ledger.commit(catalog.all_paths[idx]);
        ++search.served;
        search.marked[m] = true;
    }
    search.best_served = search.served;
    search.best_chosen = search.chosen;
    std::vector<NodeId> start(prefix);
    if (start.empty()) start.push_back(catalog.all_paths[catalog.per_pair[pair_id].front()].nodes.front());
    search.search_pair(pair_id, start);
    if (stats) *stats = search.stats;
    return finish(search, committed.lp_optimum);
}

Step1Plan solve_step1(NetworkGraph& g, const PathSetCatalog& catalog) {
    PathLp lp = build_step1_lp(catalog, g);
    FractionalSolution fractional = solve_lp(lp.problem);
    Step1Plan plan = recover_integer_step1(fractional, catalog, g);
    for (int m = 0; m < catalog.num_pairs(); ++m)
        if (plan.selected[m] >= 0) g.reserve_path(catalog.all_paths[plan.selected[m]], 1);
    return plan;
}

}  // namespace entroute
