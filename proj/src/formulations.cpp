#include "entroute/formulations.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace entroute {

PathLp build_step1_lp(const PathSetCatalog& catalog, const NetworkGraph& g) {
    if (catalog.all_paths.empty()) throw std::invalid_argument("catalog has no paths");
    PathLp out;
    int num_paths = static_cast<int>(catalog.all_paths.size());
    out.problem.num_vars = num_paths;
    out.problem.objective.assign(num_paths, 1.0);
    out.problem.var_bounds.assign(num_paths, {0.0, 1.0});
    out.var_to_path.resize(num_paths);
    for (int j = 0; j < num_paths; ++j) out.var_to_path[j] = j;

    for (const auto& indices : catalog.per_pair) {
        LpRow row;
        for (int idx : indices) row.coeffs.emplace_back(idx, 1.0);
        row.upper = 1.0;
        out.problem.rows.push_back(std::move(row));
    }
    std::map<NodeId, std::vector<int>> traversals;  // switch -> path vars through it
    for (int j = 0; j < num_paths; ++j) {
        const RoutePath& p = catalog.all_paths[j];
        for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) traversals[p.nodes[i]].push_back(j);
    }
    for (const SwitchNode& sw : g.switches()) {
        LpRow row;
        auto it = traversals.find(sw.id);
        if (it != traversals.end())
            for (int j : it->second) row.coeffs.emplace_back(j, 1.0);
        row.upper = g.residual_qubits(sw.id) / 2.0;
        out.problem.rows.push_back(std::move(row));
    }
    return out;
}

PathLp build_step2_lp(const PathSetCatalog& catalog, const std::vector<int>& path_indices,
                      const NetworkGraph& g) {
    if (path_indices.empty()) throw std::invalid_argument("no paths given");
    PathLp out;
    int num_vars = static_cast<int>(path_indices.size());
    out.problem.num_vars = num_vars;
    out.var_to_path = path_indices;
    out.problem.objective.resize(num_vars);
    out.problem.var_bounds.resize(num_vars);

    std::map<NodeId, std::vector<int>> traversals;
    for (int v = 0; v < num_vars; ++v) {
        const RoutePath& p = catalog.all_paths[path_indices[v]];
        if (p.nodes.size() < 3)
            throw std::invalid_argument("path without an intermediate switch has no capacity bound");
        out.problem.objective[v] = p.success_prob;
        int cap = std::numeric_limits<int>::max();
        for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
            cap = std::min(cap, g.residual_qubits(p.nodes[i]) / 2);
            traversals[p.nodes[i]].push_back(v);
        }
        out.problem.var_bounds[v] = {0.0, static_cast<double>(cap)};
    }
    for (const SwitchNode& sw : g.switches()) {
        LpRow row;
        auto it = traversals.find(sw.id);
        if (it != traversals.end())
            for (int v : it->second) row.coeffs.emplace_back(v, 1.0);
        row.upper = g.residual_qubits(sw.id) / 2.0;
        out.problem.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace entroute
