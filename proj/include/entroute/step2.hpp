#pragma once

#include <vector>

#include "entroute/formulations.hpp"
#include "entroute/graph.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/lp.hpp"
#include "entroute/step1.hpp"

namespace entroute {

// Channel assignment maximizing expected throughput on the residual graph.
struct Step2Plan {
    std::vector<int> channels;  // parallel to catalog.all_paths
    double additional_throughput = 0.0;  // from the channels above
    double total_throughput = 0.0;       // plus one reserved channel per main path
    double lp_optimum = 0.0;
};

struct Step2SearchStats {
    long nodes = 0;
    long leaves = 0;
};

// Floors the fractional channel counts in descending order (skipping units
// that no longer fit), then resolves the fractional remainders with the
// exhaustive include/exclude search. Throws std::invalid_argument when the
// solution status is not optimal or sizes do not match; throws
// InstanceTooLargeError when more than 64 fractional remainders survive.
Step2Plan recover_integer_step2(const FractionalSolution& fractional, const PathSetCatalog& catalog,
                                const std::vector<int>& path_indices, const NetworkGraph& g,
                                Step2SearchStats* stats = nullptr);

// Exhaustive include/exclude search over paths with positive remainders, on
// top of a working plan. Every branch is explored (subtrees that provably
// cannot beat the incumbent are skipped); the best leaf wins, first found on
// ties. `residues` is parallel to catalog.all_paths.
Step2Plan branch_and_price2(const std::vector<double>& residues, const Step2Plan& working,
                            const PathSetCatalog& catalog, const std::vector<int>& path_indices,
                            const NetworkGraph& g, Step2SearchStats* stats = nullptr);

// Step-II pipeline on the residual graph: restrict the catalog to pairs
// served in step I, solve the relaxation, recover integers. The total adds
// one reserved channel per step-I main path.
Step2Plan solve_step2(const NetworkGraph& g, const Step1Plan& step1, const PathSetCatalog& catalog);

// The same machinery run standalone over the full catalog and capacities.
Step2Plan solve_throughput_direct(const NetworkGraph& g, const PathSetCatalog& catalog);

// Pairs with at least one channel in the plan.
int count_served_pairs(const Step2Plan& plan, const PathSetCatalog& catalog);

}  // namespace entroute
