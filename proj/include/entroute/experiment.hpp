#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entroute/topology.hpp"

namespace entroute {

enum class SweepParam { none, num_switches, num_pairs, qubits, swap_prob, avg_degree };
enum class Algorithm { multi_r, alg4_direct, fer, qpass, b1 };

std::string to_string(SweepParam param);
std::string to_string(Algorithm algorithm);
SweepParam sweep_param_from_string(const std::string& name);
Algorithm algorithm_from_string(const std::string& name);

struct ExperimentConfig {
    TopologyConfig base;
    SweepParam sweep_param = SweepParam::none;
    std::vector<double> sweep_values;  // ignored when sweep_param is none
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    std::vector<Algorithm> algorithms = {Algorithm::multi_r, Algorithm::alg4_direct, Algorithm::fer,
                                         Algorithm::qpass, Algorithm::b1};
    std::uint64_t mc_trials = 0;  // 0 = skip Monte Carlo columns
    bool record_runtime = true;   // false zeroes runtime_ms for byte-stable output
};

struct ExperimentResult {
    std::string csv;
    int capacity_violations = 0;  // plans rejected by the central validator
    int errors = 0;               // instances recorded with an error row
};

ExperimentConfig experiment_config_from_json(const std::string& text);

// Runs every sweep point x seed x algorithm: generates the topology, builds
// the catalog once per instance, records served pairs, analytic throughput,
// optional Monte Carlo columns and runtime. Per-instance failures become
// error rows and the run continues. Rows are ordered by sweep value,
// algorithm, seed, with one aggregate row (seed = "mean") per point.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace entroute
