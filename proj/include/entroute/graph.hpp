#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "entroute/errors.hpp"

namespace entroute {

using NodeId = int;

struct SwitchNode {
    NodeId id = -1;
    double x = 0.0;
    double y = 0.0;
    int qubit_capacity = 0;   // even, >= 0
    int reserved_qubits = 0;  // even, <= qubit_capacity
};

struct UserNode {
    NodeId id = -1;
    double x = 0.0;
    double y = 0.0;
};

struct QuantumLink {
    NodeId a = -1;  // stored with a < b
    NodeId b = -1;
    double length = 0.0;
    double success_prob = 0.0;  // exp(-alpha * length)
};

struct UserPair {
    int pair_id = -1;
    NodeId source = -1;
    NodeId destination = -1;
};

struct RoutePath {
    int pair_id = -1;             // -1 when not attached to a pair
    std::vector<NodeId> nodes;    // source ... destination, loop free
    int hop_count = 0;            // |nodes| - 1
    double total_length = 0.0;
    double success_prob = 0.0;    // prod p over links * q^(hops - 1)
};

// p = exp(-alpha * L); throws std::invalid_argument on non-positive input.
double link_success_prob(double length, double alpha);

// Undirected switch/user graph. Immutable after construction except for the
// qubit reservation ledger; read-only queries are safe to share across
// threads, the ledger is confined to one routing session.
class NetworkGraph {
public:
    NetworkGraph(double alpha, double swap_prob);

    void add_switch(NodeId id, double x, double y, int qubit_capacity);
    void add_user(NodeId id, double x, double y);
    void add_link(NodeId a, NodeId b, double length);
    int add_pair(NodeId source, NodeId destination);  // returns pair_id

    double alpha() const { return alpha_; }
    double swap_prob() const { return swap_prob_; }

    bool has_node(NodeId id) const;
    bool is_switch(NodeId id) const;
    bool is_user(NodeId id) const;

    const std::vector<SwitchNode>& switches() const { return switches_; }
    const std::vector<UserNode>& users() const { return users_; }
    const std::vector<QuantumLink>& links() const { return links_; }
    const std::vector<UserPair>& pairs() const { return pairs_; }

    // neighbor ids in ascending order
    const std::vector<NodeId>& neighbors(NodeId id) const;
    const QuantumLink* find_link(NodeId a, NodeId b) const;

    // switch-only queries; throw std::invalid_argument for non-switch ids
    int qubit_capacity(NodeId id) const;
    int reserved_qubits(NodeId id) const;
    int residual_qubits(NodeId id) const;

    // Reservation ledger. One channel holds 2 qubits at every intermediate
    // switch of the path; user endpoints are unconstrained.
    void reserve_path(const RoutePath& path, int channels);
    void release_path(const RoutePath& path, int channels);
    void reset_reservations();

private:
    friend class GraphBuilderAccess;

    const SwitchNode* switch_ptr(NodeId id) const;
    SwitchNode* switch_ptr(NodeId id);

    double alpha_;
    double swap_prob_;
    std::vector<SwitchNode> switches_;
    std::vector<UserNode> users_;
    std::vector<QuantumLink> links_;
    std::vector<UserPair> pairs_;
    // slot: index into switches_ (>= 0) or ~index into users_ (< 0)
    std::unordered_map<NodeId, int> slot_;
    std::unordered_map<NodeId, std::vector<NodeId>> adjacency_;
    std::map<std::pair<NodeId, NodeId>, int> link_index_;
};

// Success probability of a node sequence: product of link probabilities times
// q^(hops-1). Throws InvalidPathError when the sequence is disconnected or
// revisits a node.
double path_success_prob(const std::vector<NodeId>& nodes, const NetworkGraph& g);

// Validates the sequence and fills in hop count, length and success
// probability. pair_id = -1 builds a detached path; otherwise the endpoints
// must match the pair.
RoutePath make_route_path(const NetworkGraph& g, int pair_id, std::vector<NodeId> nodes);

// Expected ebits per time slot delivered by a path holding the given number
// of qubits at each intermediate switch (2 qubits = 1 channel).
double expected_throughput(const RoutePath& path, int assigned_qubits);

}  // namespace entroute
