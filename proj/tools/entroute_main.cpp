#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entroute/experiment.hpp"
#include "entroute/json_io.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/montecarlo.hpp"
#include "entroute/plan.hpp"
#include "entroute/step1.hpp"
#include "entroute/step2.hpp"
#include "entroute/baselines.hpp"

namespace {

using nlohmann::json;
using namespace entroute;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << std::endl;
    else
        write_text_file(out_path, text + "\n");
}

struct TopologyFlags {
    std::optional<std::uint64_t> seed;
    std::optional<int> switches, pairs, qubits;
    std::optional<double> degree, swap_prob, link_prob, area, cutoff_factor;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--switches", switches, "number of switches N");
        cmd->add_option("--pairs", pairs, "number of user pairs M");
        cmd->add_option("--qubits", qubits, "qubits per switch (even)");
        cmd->add_option("--degree", degree, "target mean switch degree");
        cmd->add_option("--swap-prob", swap_prob, "swap success probability q");
        cmd->add_option("--link-prob", link_prob, "success probability of a cutoff-length link");
        cmd->add_option("--area", area, "side of the placement square");
        cmd->add_option("--cutoff-factor", cutoff_factor, "edge length cutoff factor");
    }

    void apply(TopologyConfig& cfg) const {
        if (seed) cfg.rng_seed = *seed;
        if (switches) cfg.num_switches = *switches;
        if (pairs) cfg.num_pairs = *pairs;
        if (qubits) cfg.qubits_per_switch = *qubits;
        if (degree) cfg.avg_degree = *degree;
        if (swap_prob) cfg.swap_prob = *swap_prob;
        if (link_prob) cfg.single_link_target_prob = *link_prob;
        if (area) cfg.area_side = *area;
        if (cutoff_factor) cfg.edge_cutoff_factor = *cutoff_factor;
    }
};

json route_plan_json(const std::string& algorithm, const NetworkGraph& g, const PathSetCatalog& catalog) {
    json doc;
    doc["algorithm"] = algorithm;
    std::vector<PlanChannel> channels;
    if (algorithm == "multi_r") {
        NetworkGraph work(g);
        Step1Plan plan1 = solve_step1(work, catalog);
        Step2Plan plan2 = solve_step2(work, plan1, catalog);
        json mains = json::array();
        for (int m = 0; m < catalog.num_pairs(); ++m)
            if (plan1.selected[m] >= 0)
                mains.push_back({{"pair", m}, {"nodes", catalog.all_paths[plan1.selected[m]].nodes}});
        doc["step1"] = {{"lp_optimum", plan1.lp_optimum},
                        {"served_count", plan1.served_count},
                        {"main_paths", std::move(mains)}};
        doc["step2"] = {{"lp_optimum", plan2.lp_optimum},
                        {"additional_throughput", plan2.additional_throughput},
                        {"total_throughput", plan2.total_throughput}};
        doc["served_pairs"] = plan1.served_count;
        doc["throughput"] = plan2.total_throughput;
        channels = assemble_channels(catalog, &plan1, &plan2);
    } else if (algorithm == "alg4_direct") {
        Step2Plan plan = solve_throughput_direct(g, catalog);
        doc["lp_optimum"] = plan.lp_optimum;
        doc["served_pairs"] = count_served_pairs(plan, catalog);
        doc["throughput"] = plan.total_throughput;
        channels = assemble_channels(catalog, nullptr, &plan);
    } else {
        RouteMetric metric = algorithm == "fer"     ? RouteMetric::expected_throughput
                             : algorithm == "qpass" ? RouteMetric::sum_inverse_p
                                                    : RouteMetric::hop_count;
        Step2Plan plan = greedy_route(g, catalog, PathMetric::for_kind(metric));
        doc["served_pairs"] = count_served_pairs(plan, catalog);
        doc["throughput"] = plan.total_throughput;
        channels = assemble_channels(catalog, nullptr, &plan);
    }
    PlanCheck check = validate_plan_capacity(g, channels);
    if (!check.ok) throw std::runtime_error("plan failed capacity validation: " + check.detail);
    doc["channels"] = json::parse(channels_to_json(channels));
    return doc;
}

int run(int argc, char** argv) {
    CLI::App app{"entanglement routing toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "emit a random topology as JSON");
    std::string gen_config, gen_out;
    TopologyFlags gen_flags;
    generate->add_option("--config", gen_config, "topology config JSON file");
    gen_flags.attach(generate);
    generate->add_option("-o,--out", gen_out, "output file (default stdout)");

    // route
    auto* route = app.add_subcommand("route", "route one instance with one algorithm");
    std::string route_graph, route_alg = "multi_r", route_out;
    route->add_option("--graph", route_graph, "graph JSON file")->required();
    route->add_option("--algorithm", route_alg, "multi_r|alg4_direct|fer|qpass|b1");
    route->add_option("-o,--out", route_out, "output file (default stdout)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a sweep and emit CSV");
    std::string exp_config, exp_out, exp_sweep;
    std::vector<double> exp_values;
    std::vector<std::uint64_t> exp_seeds;
    std::vector<std::string> exp_algorithms;
    std::uint64_t exp_mc_trials = 0;
    bool exp_zero_runtime = false;
    TopologyFlags exp_flags;
    experiment->add_option("--config", exp_config, "experiment config JSON file");
    exp_flags.attach(experiment);
    experiment->add_option("--sweep", exp_sweep, "sweep parameter name");
    experiment->add_option("--values", exp_values, "sweep values")->delimiter(',');
    experiment->add_option("--seeds", exp_seeds, "seeds")->delimiter(',');
    experiment->add_option("--algorithms", exp_algorithms, "algorithms")->delimiter(',');
    experiment->add_option("--mc-trials", exp_mc_trials, "Monte Carlo trials per plan (0 = skip)");
    experiment->add_flag("--zero-runtime", exp_zero_runtime, "write 0 in runtime_ms for byte-stable output");
    experiment->add_option("-o,--out", exp_out, "output CSV file (default stdout)");

    // validate
    auto* validate = app.add_subcommand("validate", "Monte Carlo check of a routing plan");
    std::string val_graph, val_plan, val_out;
    std::uint64_t val_trials = 100000, val_seed = 1;
    validate->add_option("--graph", val_graph, "graph JSON file")->required();
    validate->add_option("--plan", val_plan, "plan JSON file")->required();
    validate->add_option("--trials", val_trials, "number of trials");
    validate->add_option("--seed", val_seed, "RNG seed");
    validate->add_option("-o,--out", val_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) {
        TopologyConfig cfg;
        if (!gen_config.empty()) cfg = topology_config_from_json(read_text_file(gen_config));
        gen_flags.apply(cfg);
        emit(graph_to_json(generate_topology(cfg)), gen_out);
    } else if (route->parsed()) {
        algorithm_from_string(route_alg);  // reject unknown names early
        NetworkGraph g = load_graph(route_graph);
        PathSetCatalog catalog = selective_paths(g, g.pairs());
        emit(route_plan_json(route_alg, g, catalog).dump(2), route_out);
    } else if (experiment->parsed()) {
        ExperimentConfig cfg;
        if (!exp_config.empty()) cfg = experiment_config_from_json(read_text_file(exp_config));
        exp_flags.apply(cfg.base);
        if (!exp_sweep.empty()) cfg.sweep_param = sweep_param_from_string(exp_sweep);
        if (!exp_values.empty()) cfg.sweep_values = exp_values;
        if (!exp_seeds.empty()) cfg.seeds = exp_seeds;
        if (!exp_algorithms.empty()) {
            cfg.algorithms.clear();
            for (const std::string& name : exp_algorithms)
                cfg.algorithms.push_back(algorithm_from_string(name));
        }
        if (exp_mc_trials > 0) cfg.mc_trials = exp_mc_trials;
        if (exp_zero_runtime) cfg.record_runtime = false;
        ExperimentResult result = run_experiment(cfg);
        if (exp_out.empty())
            std::cout << result.csv;
        else
            write_text_file(exp_out, result.csv);
        if (result.capacity_violations > 0)
            throw std::runtime_error(std::to_string(result.capacity_violations) +
                                     " plans failed capacity validation");
    } else if (validate->parsed()) {
        NetworkGraph g = load_graph(val_graph);
        json plan_doc = json::parse(read_text_file(val_plan));
        std::string channels_text =
            plan_doc.contains("channels") ? plan_doc.at("channels").dump() : plan_doc.dump();
        std::vector<PlanChannel> channels = channels_from_json(g, channels_text);
        McResult mc = simulate_throughput(g, channels, val_trials, val_seed);
        json out;
        out["trials"] = mc.trials;
        out["mean_throughput"] = mc.mean_throughput;
        out["std_error"] = mc.std_error;
        out["analytic_throughput"] = analytic_throughput(channels);
        out["per_pair_means"] = json::object();
        for (const auto& [pair_id, mean] : mc.per_pair_means)
            out["per_pair_means"][std::to_string(pair_id)] = mean;
        emit(out.dump(2), val_out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = {{"type", typeid(e).name()}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return 1;
    }
}
