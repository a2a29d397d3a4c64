#include "entroute/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "entroute/baselines.hpp"
#include "entroute/json_io.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/montecarlo.hpp"
#include "entroute/plan.hpp"
#include "entroute/rng.hpp"
#include "entroute/step1.hpp"
#include "entroute/step2.hpp"

namespace entroute {

std::string to_string(SweepParam param) {
    switch (param) {
        case SweepParam::none: return "none";
        case SweepParam::num_switches: return "num_switches";
        case SweepParam::num_pairs: return "num_pairs";
        case SweepParam::qubits: return "qubits";
        case SweepParam::swap_prob: return "swap_prob";
        case SweepParam::avg_degree: return "avg_degree";
    }
    return "?";
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::multi_r: return "multi_r";
        case Algorithm::alg4_direct: return "alg4_direct";
        case Algorithm::fer: return "fer";
        case Algorithm::qpass: return "qpass";
        case Algorithm::b1: return "b1";
    }
    return "?";
}

SweepParam sweep_param_from_string(const std::string& name) {
    for (SweepParam p : {SweepParam::none, SweepParam::num_switches, SweepParam::num_pairs,
                         SweepParam::qubits, SweepParam::swap_prob, SweepParam::avg_degree})
        if (to_string(p) == name) return p;
    throw std::invalid_argument("unknown sweep parameter: " + name);
}

Algorithm algorithm_from_string(const std::string& name) {
    for (Algorithm a : {Algorithm::multi_r, Algorithm::alg4_direct, Algorithm::fer, Algorithm::qpass,
                        Algorithm::b1})
        if (to_string(a) == name) return a;
    throw std::invalid_argument("unknown algorithm: " + name);
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    ExperimentConfig c;
    if (doc.contains("base")) c.base = topology_config_from_json(doc.at("base").dump());
    if (doc.contains("sweep")) {
        c.sweep_param = sweep_param_from_string(doc.at("sweep").at("param").get<std::string>());
        c.sweep_values = doc.at("sweep").at("values").get<std::vector<double>>();
    }
    if (doc.contains("seeds")) c.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    if (doc.contains("algorithms")) {
        c.algorithms.clear();
        for (const auto& name : doc.at("algorithms")) c.algorithms.push_back(algorithm_from_string(name));
    }
    if (doc.contains("mc_trials")) c.mc_trials = doc.at("mc_trials").get<std::uint64_t>();
    if (doc.contains("record_runtime")) c.record_runtime = doc.at("record_runtime").get<bool>();
    if (c.seeds.empty()) throw std::invalid_argument("need at least one seed");
    return c;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

TopologyConfig apply_sweep(TopologyConfig base, SweepParam param, double value) {
    switch (param) {
        case SweepParam::none: break;
        case SweepParam::num_switches: base.num_switches = static_cast<int>(value); break;
        case SweepParam::num_pairs: base.num_pairs = static_cast<int>(value); break;
        case SweepParam::qubits: base.qubits_per_switch = static_cast<int>(value); break;
        case SweepParam::swap_prob: base.swap_prob = value; break;
        case SweepParam::avg_degree: base.avg_degree = value; break;
    }
    return base;
}

struct RunOutcome {
    int served = 0;
    double throughput = 0.0;
    std::vector<PlanChannel> channels;
};

RunOutcome run_algorithm(Algorithm algorithm, const NetworkGraph& graph, const PathSetCatalog& catalog) {
    RunOutcome out;
    switch (algorithm) {
        case Algorithm::multi_r: {
            NetworkGraph g(graph);  // reservations stay local to this run
            Step1Plan plan1 = solve_step1(g, catalog);
            Step2Plan plan2 = solve_step2(g, plan1, catalog);
            out.served = plan1.served_count;
            out.throughput = plan2.total_throughput;
            out.channels = assemble_channels(catalog, &plan1, &plan2);
            break;
        }
        case Algorithm::alg4_direct: {
            Step2Plan plan = solve_throughput_direct(graph, catalog);
            out.served = count_served_pairs(plan, catalog);
            out.throughput = plan.total_throughput;
            out.channels = assemble_channels(catalog, nullptr, &plan);
            break;
        }
        case Algorithm::fer:
        case Algorithm::qpass:
        case Algorithm::b1: {
            RouteMetric metric = algorithm == Algorithm::fer ? RouteMetric::expected_throughput
                                 : algorithm == Algorithm::qpass ? RouteMetric::sum_inverse_p
                                                                 : RouteMetric::hop_count;
            Step2Plan plan = greedy_route(graph, catalog, PathMetric::for_kind(metric));
            out.served = count_served_pairs(plan, catalog);
            out.throughput = plan.total_throughput;
            out.channels = assemble_channels(catalog, nullptr, &plan);
            break;
        }
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.seeds.empty()) throw std::invalid_argument("need at least one seed");
    std::vector<double> values = config.sweep_values;
    if (config.sweep_param == SweepParam::none || values.empty()) values = {0.0};
    std::sort(values.begin(), values.end());
    std::vector<std::uint64_t> seeds = config.seeds;
    std::sort(seeds.begin(), seeds.end());

    ExperimentResult result;
    std::ostringstream csv;
    csv << "sweep_param,sweep_value,algorithm,seed,served_pairs,throughput,mc_throughput,mc_stderr,"
           "runtime_ms,error\n";

    for (double value : values) {
        TopologyConfig point = apply_sweep(config.base, config.sweep_param, value);

        // one instance per seed, shared by all algorithms at this point
        struct Instance {
            bool ok = false;
            std::string error;
            NetworkGraph graph{1.0, 1.0};
            PathSetCatalog catalog;
        };
        std::vector<Instance> instances(seeds.size());
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            TopologyConfig cfg = point;
            cfg.rng_seed = seeds[s];
            try {
                instances[s].graph = generate_topology(cfg);
                instances[s].catalog = selective_paths(instances[s].graph, instances[s].graph.pairs());
                instances[s].ok = true;
            } catch (const std::exception& e) {
                instances[s].error = e.what();
            }
        }

        for (Algorithm algorithm : config.algorithms) {
            double served_sum = 0.0, throughput_sum = 0.0, mc_sum = 0.0, runtime_sum = 0.0;
            int ok_rows = 0;
            for (std::size_t s = 0; s < seeds.size(); ++s) {
                csv << to_string(config.sweep_param) << ',' << fmt(value) << ','
                    << to_string(algorithm) << ',' << seeds[s] << ',';
                if (!instances[s].ok) {
                    csv << ",,,,," << csv_escape(instances[s].error) << '\n';
                    ++result.errors;
                    continue;
                }
                try {
                    auto start = std::chrono::steady_clock::now();
                    RunOutcome outcome = run_algorithm(algorithm, instances[s].graph, instances[s].catalog);
                    double ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
                    if (!config.record_runtime) ms = 0.0;

                    PlanCheck check = validate_plan_capacity(instances[s].graph, outcome.channels);
                    if (!check.ok) {
                        ++result.capacity_violations;
                        csv << ",,,,," << csv_escape("capacity violation: " + check.detail) << '\n';
                        ++result.errors;
                        continue;
                    }
                    std::string mc_mean, mc_err;
                    if (config.mc_trials > 0) {
                        McResult mc = simulate_throughput(
                            instances[s].graph, outcome.channels, config.mc_trials,
                            substream_seed(seeds[s], static_cast<std::uint64_t>(algorithm)));
                        mc_mean = fmt(mc.mean_throughput);
                        mc_err = fmt(mc.std_error);
                        mc_sum += mc.mean_throughput;
                    }
                    csv << outcome.served << ',' << fmt(outcome.throughput) << ',' << mc_mean << ','
                        << mc_err << ',' << fmt(ms) << ",\n";
                    served_sum += outcome.served;
                    throughput_sum += outcome.throughput;
                    runtime_sum += ms;
                    ++ok_rows;
                } catch (const std::exception& e) {
                    csv << ",,,,," << csv_escape(e.what()) << '\n';
                    ++result.errors;
                }
            }
            csv << to_string(config.sweep_param) << ',' << fmt(value) << ',' << to_string(algorithm)
                << ",mean,";
            if (ok_rows > 0) {
                csv << fmt(served_sum / ok_rows) << ',' << fmt(throughput_sum / ok_rows) << ',';
                if (config.mc_trials > 0)
                    csv << fmt(mc_sum / ok_rows);
                csv << ',' << ',' << fmt(runtime_sum / ok_rows) << ",\n";
            } else {
                csv << ",,,,,no successful runs\n";
            }
        }
    }
    result.csv = csv.str();
    return result;
}

}  // namespace entroute
