#include "entroute/plan.hpp"

#include <map>

namespace entroute {

std::vector<PlanChannel> assemble_channels(const PathSetCatalog& catalog, const Step1Plan* step1,
                                           const Step2Plan* step2) {
    std::map<int, int> counts;  // all_paths index -> channels
    if (step1)
        for (int idx : step1->selected)
            if (idx >= 0) counts[idx] += 1;
    if (step2)
        for (std::size_t i = 0; i < step2->channels.size(); ++i)
            if (step2->channels[i] > 0) counts[static_cast<int>(i)] += step2->channels[i];
    std::vector<PlanChannel> out;
    for (const auto& [idx, channels] : counts)
        out.push_back(PlanChannel{catalog.all_paths[idx], channels});
    return out;
}

PlanCheck validate_plan_capacity(const NetworkGraph& g, const std::vector<PlanChannel>& channels) {
    std::map<NodeId, int> qubits;  // switch -> consumed qubits
    for (const PlanChannel& entry : channels) {
        if (entry.channels < 0) return {false, "negative channel count"};
        const auto& nodes = entry.path.nodes;
        for (std::size_t i = 1; i + 1 < nodes.size(); ++i) qubits[nodes[i]] += 2 * entry.channels;
    }
    for (const auto& [sw, used] : qubits) {
        if (!g.is_switch(sw)) return {false, "plan routes through non-switch node " + std::to_string(sw)};
        if (used > g.qubit_capacity(sw))
            return {false, "switch " + std::to_string(sw) + " needs " + std::to_string(used) +
                               " qubits but holds " + std::to_string(g.qubit_capacity(sw))};
    }
    return {};
}

}  // namespace entroute
