#pragma once

#include <vector>

#include "entroute/graph.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/lp.hpp"

namespace entroute {

// An LP over catalog paths plus the variable -> path index map.
struct PathLp {
    LpProblem problem;
    std::vector<int> var_to_path;  // LP variable -> index into catalog.all_paths
};

// Relaxed pair-maximization problem: one [0,1] variable per catalog path,
// one row per pair (sum of its paths <= 1) and one row per switch
// (paths through it <= residual qubits / 2).
PathLp build_step1_lp(const PathSetCatalog& catalog, const NetworkGraph& g);

// Relaxed throughput problem over the given catalog paths: one channel-count
// variable per path with bound [0, min residual/2 over its switches],
// objective = per-channel success probability, switch rows as above.
PathLp build_step2_lp(const PathSetCatalog& catalog, const std::vector<int>& path_indices,
                      const NetworkGraph& g);

}  // namespace entroute
