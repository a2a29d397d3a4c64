#include "entroute/step2.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "entroute/capacity.hpp"

namespace entroute {

namespace {

constexpr double kEps = 1e-9;
constexpr int kMaxResidues = 64;

struct Step2Search {
    const PathSetCatalog& cat;
    CapacityLedger ledger;
    std::vector<int> order;  // candidate paths, descending residue
    const std::vector<double>& residue;
    std::vector<bool> marked_or_done;
    std::vector<int> channels;  // parallel to all_paths
    double value = 0.0;
    std::vector<int> best_channels;
    double best_value = 0.0;
    Step2SearchStats stats;

    Step2Search(const PathSetCatalog& c, const NetworkGraph& g, const std::vector<double>& res)
        : cat(c), ledger(g), residue(res) {}

    void recurse() {
        ++stats.nodes;
        int pick = -1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int idx = order[i];
            if (marked_or_done[i]) continue;
            if (!ledger.can_route(cat.all_paths[idx])) continue;
            pick = static_cast<int>(i);
            break;
        }
        if (pick < 0) {
            ++stats.leaves;
            if (value > best_value + 1e-12) {
                best_value = value;
                best_channels = channels;
            }
            return;
        }
        // skip subtrees that cannot strictly beat the incumbent
        double bound = value;
        for (std::size_t i = pick; i < order.size(); ++i) {
            if (marked_or_done[i]) continue;
            const RoutePath& p = cat.all_paths[order[i]];
            if (ledger.can_route(p)) bound += p.success_prob;
        }
        if (bound <= best_value + 1e-12) return;

        int idx = order[pick];
        const RoutePath& p = cat.all_paths[idx];
        marked_or_done[pick] = true;
        ledger.commit(p);
        ++channels[idx];
        value += p.success_prob;
        recurse();
        value -= p.success_prob;
        --channels[idx];
        ledger.release(p);
        recurse();
        marked_or_done[pick] = false;
    }
};

std::vector<double> checked_values(const FractionalSolution& fractional,
                                   const std::vector<int>& path_indices) {
    if (fractional.status != LpStatus::optimal)
        throw std::invalid_argument("fractional solution is not optimal");
    if (fractional.values.size() != path_indices.size())
        throw std::invalid_argument("fractional solution does not match the path set");
    std::vector<double> q(fractional.values);
    for (double& v : q) {
        if (v < -kEps) throw std::invalid_argument("fractional channel count below zero");
        if (v < 0.0) v = 0.0;
    }
    return q;
}

double plan_value(const Step2Plan& plan, const PathSetCatalog& cat) {
    double v = 0.0;
    for (std::size_t i = 0; i < plan.channels.size(); ++i)
        v += plan.channels[i] * cat.all_paths[i].success_prob;
    return v;
}

}  // namespace

Step2Plan branch_and_price2(const std::vector<double>& residues, const Step2Plan& working,
                            const PathSetCatalog& catalog, const std::vector<int>& path_indices,
                            const NetworkGraph& g, Step2SearchStats* stats) {
    if (residues.size() != catalog.all_paths.size())
        throw std::invalid_argument("residues do not match the catalog");
    Step2Search search(catalog, g, residues);
    search.channels = working.channels;
    search.channels.resize(catalog.all_paths.size(), 0);
    for (std::size_t i = 0; i < search.channels.size(); ++i)
        for (int c = 0; c < search.channels[i]; ++c) search.ledger.commit(catalog.all_paths[i]);

    // fixed candidate order: descending residue, ties by path index
    for (int idx : path_indices)
        if (residues[idx] > kEps) search.order.push_back(idx);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return residues[a] > residues[b]; });
    if (static_cast<int>(search.order.size()) > kMaxResidues)
        throw InstanceTooLargeError("more than 64 fractional remainders");
    search.marked_or_done.assign(search.order.size(), false);

    search.value = plan_value(working, catalog);
    search.best_value = search.value;
    search.best_channels = search.channels;
    search.recurse();
    if (stats) *stats = search.stats;

    Step2Plan out;
    out.channels = search.best_channels;
    out.additional_throughput = search.best_value;
    out.total_throughput = search.best_value;
    out.lp_optimum = working.lp_optimum;
    return out;
}

Step2Plan recover_integer_step2(const FractionalSolution& fractional, const PathSetCatalog& catalog,
                                const std::vector<int>& path_indices, const NetworkGraph& g,
                                Step2SearchStats* stats) {
    std::vector<double> q = checked_values(fractional, path_indices);

    // floor phase: descending fractional value, unit commitments, skip what
    // no longer fits
    std::vector<int> order(path_indices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return q[a] > q[b]; });

    Step2Plan working;
    working.channels.assign(catalog.all_paths.size(), 0);
    working.lp_optimum = fractional.objective_value;
    CapacityLedger ledger(g);
    std::vector<double> residues(catalog.all_paths.size(), 0.0);
    for (int v : order) {
        int idx = path_indices[v];
        const RoutePath& p = catalog.all_paths[idx];
        int whole = static_cast<int>(std::floor(q[v] + kEps));
        for (int c = 0; c < whole; ++c) {
            if (!ledger.can_route(p)) break;  // remaining units are equally infeasible
            ledger.commit(p);
            ++working.channels[idx];
        }
        double rem = q[v] - whole;
        residues[idx] = rem > kEps ? rem : 0.0;
    }
    Step2Plan out = branch_and_price2(residues, working, catalog, path_indices, g, stats);
    return out;
}

Step2Plan solve_step2(const NetworkGraph& g, const Step1Plan& step1, const PathSetCatalog& catalog) {
    std::vector<int> eligible;
    for (int m = 0; m < catalog.num_pairs(); ++m) {
        if (m >= static_cast<int>(step1.selected.size()) || step1.selected[m] < 0) continue;
        for (int idx : catalog.per_pair[m]) eligible.push_back(idx);
    }
    Step2Plan plan;
    if (eligible.empty()) {
        plan.channels.assign(catalog.all_paths.size(), 0);
    } else {
        PathLp lp = build_step2_lp(catalog, eligible, g);
        FractionalSolution fractional = solve_lp(lp.problem);
        plan = recover_integer_step2(fractional, catalog, eligible, g);
    }
    plan.total_throughput = plan.additional_throughput;
    for (int m = 0; m < catalog.num_pairs(); ++m)
        if (m < static_cast<int>(step1.selected.size()) && step1.selected[m] >= 0)
            plan.total_throughput += catalog.all_paths[step1.selected[m]].success_prob;
    return plan;
}

Step2Plan solve_throughput_direct(const NetworkGraph& g, const PathSetCatalog& catalog) {
    std::vector<int> eligible;
    for (int m = 0; m < catalog.num_pairs(); ++m)
        for (int idx : catalog.per_pair[m]) eligible.push_back(idx);
    Step2Plan plan;
    if (eligible.empty()) {
        plan.channels.assign(catalog.all_paths.size(), 0);
        return plan;
    }
    PathLp lp = build_step2_lp(catalog, eligible, g);
    FractionalSolution fractional = solve_lp(lp.problem);
    plan = recover_integer_step2(fractional, catalog, eligible, g);
    return plan;
}

int count_served_pairs(const Step2Plan& plan, const PathSetCatalog& catalog) {
    std::set<int> pairs;
    for (std::size_t i = 0; i < plan.channels.size(); ++i)
        if (plan.channels[i] > 0) pairs.insert(catalog.all_paths[i].pair_id);
    return static_cast<int>(pairs.size());
}

}  // namespace entroute
