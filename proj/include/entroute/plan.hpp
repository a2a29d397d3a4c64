#pragma once

#include <string>
#include <vector>

#include "entroute/graph.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/montecarlo.hpp"
#include "entroute/step1.hpp"
#include "entroute/step2.hpp"

namespace entroute {

// Full physical assignment: one reserved channel per step-I main path merged
// with the step-II channels. Either part may be empty.
std::vector<PlanChannel> assemble_channels(const PathSetCatalog& catalog, const Step1Plan* step1,
                                           const Step2Plan* step2);

struct PlanCheck {
    bool ok = true;
    std::string detail;
};

// Central feasibility check: 2 qubits per channel at every intermediate
// switch, summed over the whole plan, must fit each switch's raw capacity.
PlanCheck validate_plan_capacity(const NetworkGraph& g, const std::vector<PlanChannel>& channels);

}  // namespace entroute
