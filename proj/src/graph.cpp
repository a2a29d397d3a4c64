#include "entroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace entroute {

double link_success_prob(double length, double alpha) {
    if (!(length > 0.0)) throw std::invalid_argument("link length must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    return std::exp(-alpha * length);
}

NetworkGraph::NetworkGraph(double alpha, double swap_prob) : alpha_(alpha), swap_prob_(swap_prob) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(swap_prob >= 0.0 && swap_prob <= 1.0)) throw std::invalid_argument("swap_prob must be in [0, 1]");
}

void NetworkGraph::add_switch(NodeId id, double x, double y, int qubit_capacity) {
    if (has_node(id)) throw std::invalid_argument("duplicate node id " + std::to_string(id));
    if (qubit_capacity < 0 || qubit_capacity % 2 != 0)
        throw std::invalid_argument("qubit capacity must be even and non-negative");
    slot_[id] = static_cast<int>(switches_.size());
    switches_.push_back(SwitchNode{id, x, y, qubit_capacity, 0});
    adjacency_[id];
}

void NetworkGraph::add_user(NodeId id, double x, double y) {
    if (has_node(id)) throw std::invalid_argument("duplicate node id " + std::to_string(id));
    slot_[id] = ~static_cast<int>(users_.size());
    users_.push_back(UserNode{id, x, y});
    adjacency_[id];
}

void NetworkGraph::add_link(NodeId a, NodeId b, double length) {
    if (a == b) throw std::invalid_argument("link endpoints must be distinct");
    if (!has_node(a) || !has_node(b)) throw std::invalid_argument("link references unknown node");
    if (is_user(a) && is_user(b)) throw std::invalid_argument("user nodes may only link to switches");
    auto key = std::minmax(a, b);
    if (link_index_.count(key)) throw std::invalid_argument("duplicate link");
    double p = link_success_prob(length, alpha_);
    link_index_[key] = static_cast<int>(links_.size());
    links_.push_back(QuantumLink{key.first, key.second, length, p});
    auto& na = adjacency_[a];
    na.insert(std::upper_bound(na.begin(), na.end(), b), b);
    auto& nb = adjacency_[b];
    nb.insert(std::upper_bound(nb.begin(), nb.end(), a), a);
}

int NetworkGraph::add_pair(NodeId source, NodeId destination) {
    if (source == destination) throw std::invalid_argument("pair endpoints must be distinct");
    if (!is_user(source) || !is_user(destination))
        throw std::invalid_argument("pair endpoints must be user nodes");
    int id = static_cast<int>(pairs_.size());
    pairs_.push_back(UserPair{id, source, destination});
    return id;
}

bool NetworkGraph::has_node(NodeId id) const { return slot_.count(id) != 0; }

bool NetworkGraph::is_switch(NodeId id) const {
    auto it = slot_.find(id);
    return it != slot_.end() && it->second >= 0;
}

bool NetworkGraph::is_user(NodeId id) const {
    auto it = slot_.find(id);
    return it != slot_.end() && it->second < 0;
}

const std::vector<NodeId>& NetworkGraph::neighbors(NodeId id) const {
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) throw std::invalid_argument("unknown node id " + std::to_string(id));
    return it->second;
}

const QuantumLink* NetworkGraph::find_link(NodeId a, NodeId b) const {
    auto it = link_index_.find(std::minmax(a, b));
    return it == link_index_.end() ? nullptr : &links_[it->second];
}

const SwitchNode* NetworkGraph::switch_ptr(NodeId id) const {
    auto it = slot_.find(id);
    if (it == slot_.end() || it->second < 0) return nullptr;
    return &switches_[it->second];
}

SwitchNode* NetworkGraph::switch_ptr(NodeId id) {
    auto it = slot_.find(id);
    if (it == slot_.end() || it->second < 0) return nullptr;
    return &switches_[it->second];
}

int NetworkGraph::qubit_capacity(NodeId id) const {
    const SwitchNode* s = switch_ptr(id);
    if (!s) throw std::invalid_argument("node " + std::to_string(id) + " is not a switch");
    return s->qubit_capacity;
}

int NetworkGraph::reserved_qubits(NodeId id) const {
    const SwitchNode* s = switch_ptr(id);
    if (!s) throw std::invalid_argument("node " + std::to_string(id) + " is not a switch");
    return s->reserved_qubits;
}

int NetworkGraph::residual_qubits(NodeId id) const {
    const SwitchNode* s = switch_ptr(id);
    if (!s) throw std::invalid_argument("node " + std::to_string(id) + " is not a switch");
    return s->qubit_capacity - s->reserved_qubits;
}

void NetworkGraph::reserve_path(const RoutePath& path, int channels) {
    if (channels <= 0) throw std::invalid_argument("channel count must be positive");
    int need = 2 * channels;
    for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i) {
        NodeId v = path.nodes[i];
        const SwitchNode* s = switch_ptr(v);
        if (!s) throw InvalidPathError("intermediate node " + std::to_string(v) + " is not a switch");
        if (s->qubit_capacity - s->reserved_qubits < need)
            throw CapacityExceededError(v, "switch " + std::to_string(v) + " cannot hold " +
                                               std::to_string(need) + " more qubits");
    }
    for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i)
        switch_ptr(path.nodes[i])->reserved_qubits += need;
}

void NetworkGraph::release_path(const RoutePath& path, int channels) {
    if (channels <= 0) throw std::invalid_argument("channel count must be positive");
    int need = 2 * channels;
    for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i) {
        SwitchNode* s = switch_ptr(path.nodes[i]);
        if (!s || s->reserved_qubits < need)
            throw std::invalid_argument("release does not match an existing reservation");
        s->reserved_qubits -= need;
    }
}

void NetworkGraph::reset_reservations() {
    for (auto& s : switches_) s.reserved_qubits = 0;
}

double path_success_prob(const std::vector<NodeId>& nodes, const NetworkGraph& g) {
    if (nodes.size() < 2) throw InvalidPathError("path needs at least two nodes");
    std::set<NodeId> seen;
    double prob = 1.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!seen.insert(nodes[i]).second) throw InvalidPathError("path revisits a node");
        if (i == 0) continue;
        const QuantumLink* link = g.find_link(nodes[i - 1], nodes[i]);
        if (!link)
            throw InvalidPathError("nodes " + std::to_string(nodes[i - 1]) + " and " +
                                   std::to_string(nodes[i]) + " are not linked");
        prob *= link->success_prob;
    }
    int hops = static_cast<int>(nodes.size()) - 1;
    return prob * std::pow(g.swap_prob(), hops - 1);
}

RoutePath make_route_path(const NetworkGraph& g, int pair_id, std::vector<NodeId> nodes) {
    RoutePath path;
    path.pair_id = pair_id;
    path.success_prob = path_success_prob(nodes, g);  // validates the sequence
    if (pair_id >= 0) {
        if (pair_id >= static_cast<int>(g.pairs().size()))
            throw std::invalid_argument("unknown pair id " + std::to_string(pair_id));
        const UserPair& pair = g.pairs()[pair_id];
        if (nodes.front() != pair.source || nodes.back() != pair.destination)
            throw InvalidPathError("path endpoints do not match the pair");
    }
    path.hop_count = static_cast<int>(nodes.size()) - 1;
    for (std::size_t i = 1; i < nodes.size(); ++i)
        path.total_length += g.find_link(nodes[i - 1], nodes[i])->length;
    path.nodes = std::move(nodes);
    return path;
}

double expected_throughput(const RoutePath& path, int assigned_qubits) {
    if (assigned_qubits < 0 || assigned_qubits % 2 != 0)
        throw std::invalid_argument("assigned qubits must be even and non-negative");
    return (assigned_qubits / 2) * path.success_prob;
}

}  // namespace entroute
