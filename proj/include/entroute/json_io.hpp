#pragma once

#include <string>
#include <vector>

#include "entroute/graph.hpp"
#include "entroute/kpaths.hpp"
#include "entroute/montecarlo.hpp"
#include "entroute/topology.hpp"

namespace entroute {

// Graph document: alpha, swap_prob, switches (id, x, y, qubits), users
// (id, x, y), links (a, b, length), pairs (source, destination). Loading
// recomputes link probabilities from alpha, so a load/save round trip is
// value identical.
std::string graph_to_json(const NetworkGraph& g);
NetworkGraph graph_from_json(const std::string& text);

void save_graph(const NetworkGraph& g, const std::string& path);
NetworkGraph load_graph(const std::string& path);

// pair_id -> list of node sequences
std::string catalog_to_json(const PathSetCatalog& catalog);

// Physical channel assignments as (pair, nodes, count) entries.
std::string channels_to_json(const std::vector<PlanChannel>& channels);
std::vector<PlanChannel> channels_from_json(const NetworkGraph& g, const std::string& text);

// TopologyConfig as a flat key/value object; unknown keys are rejected.
TopologyConfig topology_config_from_json(const std::string& text);
std::string topology_config_to_json(const TopologyConfig& config);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace entroute
