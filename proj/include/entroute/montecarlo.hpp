#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "entroute/graph.hpp"

namespace entroute {

// One entry of a physical channel plan: a path and how many parallel
// channels it holds.
struct PlanChannel {
    RoutePath path;
    int channels = 0;
};

struct McResult {
    std::uint64_t trials = 0;
    double mean_throughput = 0.0;  // successful channels per time slot
    double std_error = 0.0;        // sample std / sqrt(trials)
    std::map<int, double> per_pair_means;
};

// Simulates the online stage: per trial every channel draws one Bernoulli per
// link and one per swap, all independent. Trials use counter-mode seeding, so
// results are independent of evaluation order and bit-identical for a fixed
// seed.
McResult simulate_throughput(const NetworkGraph& g, const std::vector<PlanChannel>& plan,
                             std::uint64_t trials, std::uint64_t seed);

// Analytic expectation of the same plan (channels times path success).
double analytic_throughput(const std::vector<PlanChannel>& plan);

}  // namespace entroute
