#pragma once

#include <unordered_map>

#include "entroute/graph.hpp"

namespace entroute {

// Channel bookkeeping against residual switch capacity. Works on a snapshot
// of the graph's reservation state without mutating it, so searches can
// commit and roll back cheaply.
class CapacityLedger {
public:
    explicit CapacityLedger(const NetworkGraph& g) : g_(&g) {}

    // channels still available at a switch
    int remaining_channels(NodeId sw) const {
        int used = 0;
        auto it = used_.find(sw);
        if (it != used_.end()) used = it->second;
        return g_->residual_qubits(sw) / 2 - used;
    }

    bool can_route(const RoutePath& path, int channels = 1) const {
        for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i)
            if (remaining_channels(path.nodes[i]) < channels) return false;
        return true;
    }

    void commit(const RoutePath& path, int channels = 1) {
        for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i) used_[path.nodes[i]] += channels;
    }

    void release(const RoutePath& path, int channels = 1) {
        for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i) used_[path.nodes[i]] -= channels;
    }

private:
    const NetworkGraph* g_;
    std::unordered_map<NodeId, int> used_;
};

}  // namespace entroute
