#pragma once

#include <vector>

#include "entroute/formulations.hpp"
#include "entroute/graph.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/lp.hpp"

namespace entroute {

// Outcome of the pair-maximization step: at most one main path per pair,
// jointly feasible against switch capacities.
struct Step1Plan {
    std::vector<int> selected;  // pair_id -> index into catalog.all_paths, -1 if unserved
    int served_count = 0;
    double lp_optimum = 0.0;
    int integral_value = 0;
};

struct Step1SearchStats {
    long nodes = 0;
    long divergences = 0;
    long leaves = 0;
};

// Rounds a fractional pair-selection solution to a feasible integer plan:
// commits every x ~ 1 path, then runs the two-branch prefix search over the
// remaining pairs in descending fractional order. Throws
// std::invalid_argument when the solution status is not optimal or the sizes
// do not match the catalog.
Step1Plan recover_integer_step1(const FractionalSolution& fractional, const PathSetCatalog& catalog,
                                const NetworkGraph& g, Step1SearchStats* stats = nullptr);

// Resumes the prefix search for one pair from an explicit partial path, on
// top of an already-committed plan. Exposed so the search behavior can be
// driven directly; recover_integer_step1 is the usual entry point.
Step1Plan branch_and_price_step1(const std::vector<NodeId>& prefix, int pair_id,
                                 const std::vector<double>& fractional_values,
                                 const Step1Plan& committed, const PathSetCatalog& catalog,
                                 const NetworkGraph& g, Step1SearchStats* stats = nullptr);

// Full step-I pipeline: build the relaxed problem, solve it, recover an
// integer plan, and reserve one channel on every selected main path.
Step1Plan solve_step1(NetworkGraph& g, const PathSetCatalog& catalog);

}  // namespace entroute
