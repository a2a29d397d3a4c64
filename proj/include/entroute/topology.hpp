#pragma once

#include <cstdint>

#include "entroute/graph.hpp"

namespace entroute {

struct TopologyConfig {
    double area_side = 10000.0;            // square side, length units
    int num_switches = 50;                 // N
    int num_pairs = 20;                    // M
    double avg_degree = 10.0;              // Waxman tuning target D
    int qubits_per_switch = 2;             // even, positive
    double swap_prob = 0.9;                // q
    double single_link_target_prob = 1e-4; // success of a cutoff-length link
    double edge_cutoff_factor = 5.0;       // max link length = factor * area_side / sqrt(N)
    double alpha_reference_length = 0.0;   // 0 = use the edge-length cutoff
    int max_retries = 64;                  // regeneration budget
    std::uint64_t rng_seed = 1;
};

// alpha such that a link of reference_length succeeds with target_prob
// exactly: -ln(target) / reference. Throws std::invalid_argument outside
// (0, 1) or for a non-positive reference.
double calibrate_alpha(double target_prob, double reference_length);

// Maximum admissible switch-switch link length for this config.
double edge_length_cutoff(const TopologyConfig& config);

// Random instance: N switches uniform in the square, Waxman edges no longer
// than the cutoff with beta tuned by bisection to the target mean degree
// (within 10%), 2M users each attached to their nearest switch, M pairs over
// disjoint users. Regenerates until the switch graph is connected and the
// realized degree is in tolerance; throws GenerationFailedError with the seed
// when the retry budget runs out. Deterministic per config.
NetworkGraph generate_topology(const TopologyConfig& config);

}  // namespace entroute
