#include "entroute/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entroute {

using nlohmann::json;

std::string graph_to_json(const NetworkGraph& g) {
    json doc;
    doc["alpha"] = g.alpha();
    doc["swap_prob"] = g.swap_prob();
    doc["switches"] = json::array();
    for (const SwitchNode& s : g.switches())
        doc["switches"].push_back({{"id", s.id}, {"x", s.x}, {"y", s.y}, {"qubits", s.qubit_capacity}});
    doc["users"] = json::array();
    for (const UserNode& u : g.users())
        doc["users"].push_back({{"id", u.id}, {"x", u.x}, {"y", u.y}});
    doc["links"] = json::array();
    for (const QuantumLink& l : g.links())
        doc["links"].push_back({{"a", l.a}, {"b", l.b}, {"length", l.length}});
    doc["pairs"] = json::array();
    for (const UserPair& p : g.pairs())
        doc["pairs"].push_back({{"source", p.source}, {"destination", p.destination}});
    return doc.dump(2);
}

NetworkGraph graph_from_json(const std::string& text) {
    json doc = json::parse(text);
    NetworkGraph g(doc.at("alpha").get<double>(), doc.at("swap_prob").get<double>());
    for (const json& s : doc.at("switches"))
        g.add_switch(s.at("id").get<NodeId>(), s.at("x").get<double>(), s.at("y").get<double>(),
                     s.at("qubits").get<int>());
    for (const json& u : doc.at("users"))
        g.add_user(u.at("id").get<NodeId>(), u.at("x").get<double>(), u.at("y").get<double>());
    for (const json& l : doc.at("links"))
        g.add_link(l.at("a").get<NodeId>(), l.at("b").get<NodeId>(), l.at("length").get<double>());
    for (const json& p : doc.at("pairs"))
        g.add_pair(p.at("source").get<NodeId>(), p.at("destination").get<NodeId>());
    return g;
}

void save_graph(const NetworkGraph& g, const std::string& path) { write_text_file(path, graph_to_json(g)); }

NetworkGraph load_graph(const std::string& path) { return graph_from_json(read_text_file(path)); }

std::string catalog_to_json(const PathSetCatalog& catalog) {
    json doc;
    doc["pairs"] = json::array();
    for (int m = 0; m < catalog.num_pairs(); ++m) {
        json entry;
        entry["pair"] = m;
        entry["paths"] = json::array();
        for (int idx : catalog.per_pair[m]) entry["paths"].push_back(catalog.all_paths[idx].nodes);
        doc["pairs"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

std::string channels_to_json(const std::vector<PlanChannel>& channels) {
    json doc = json::array();
    for (const PlanChannel& entry : channels)
        doc.push_back({{"pair", entry.path.pair_id}, {"nodes", entry.path.nodes}, {"count", entry.channels}});
    return doc.dump(2);
}

std::vector<PlanChannel> channels_from_json(const NetworkGraph& g, const std::string& text) {
    json doc = json::parse(text);
    std::vector<PlanChannel> out;
    for (const json& entry : doc) {
        PlanChannel ch;
        ch.channels = entry.at("count").get<int>();
        ch.path = make_route_path(g, entry.at("pair").get<int>(), entry.at("nodes").get<std::vector<NodeId>>());
        out.push_back(std::move(ch));
    }
    return out;
}

TopologyConfig topology_config_from_json(const std::string& text) {
    json doc = json::parse(text);
    TopologyConfig c;
    for (const auto& [key, value] : doc.items()) {
        if (key == "area_side") c.area_side = value.get<double>();
        else if (key == "num_switches") c.num_switches = value.get<int>();
        else if (key == "num_pairs") c.num_pairs = value.get<int>();
        else if (key == "avg_degree") c.avg_degree = value.get<double>();
        else if (key == "qubits_per_switch") c.qubits_per_switch = value.get<int>();
        else if (key == "swap_prob") c.swap_prob = value.get<double>();
        else if (key == "single_link_target_prob") c.single_link_target_prob = value.get<double>();
        else if (key == "edge_cutoff_factor") c.edge_cutoff_factor = value.get<double>();
        else if (key == "alpha_reference_length") c.alpha_reference_length = value.get<double>();
        else if (key == "max_retries") c.max_retries = value.get<int>();
        else if (key == "rng_seed") c.rng_seed = value.get<std::uint64_t>();
        else throw std::invalid_argument("unknown topology config key: " + key);
    }
    return c;
}

std::string topology_config_to_json(const TopologyConfig& c) {
    json doc;
    doc["area_side"] = c.area_side;
    doc["num_switches"] = c.num_switches;
    doc["num_pairs"] = c.num_pairs;
    doc["avg_degree"] = c.avg_degree;
    doc["qubits_per_switch"] = c.qubits_per_switch;
    doc["swap_prob"] = c.swap_prob;
    doc["single_link_target_prob"] = c.single_link_target_prob;
    doc["edge_cutoff_factor"] = c.edge_cutoff_factor;
    doc["alpha_reference_length"] = c.alpha_reference_length;
    doc["max_retries"] = c.max_retries;
    doc["rng_seed"] = c.rng_seed;
    return doc.dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace entroute
