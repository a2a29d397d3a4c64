#include "entroute/montecarlo.hpp"

#include <cmath>

#include "entroute/rng.hpp"

namespace entroute {

McResult simulate_throughput(const NetworkGraph& g, const std::vector<PlanChannel>& plan,
                             std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trial count must be positive");

    // per-channel link probabilities, gathered once
    struct ChannelSpec {
        std::vector<double> link_probs;
        int copies;
        int pair_id;
    };
    std::vector<ChannelSpec> specs;
    for (const PlanChannel& entry : plan) {
        if (entry.channels < 0) throw std::invalid_argument("negative channel count");
        if (entry.channels == 0) continue;
        ChannelSpec spec;
        spec.copies = entry.channels;
        spec.pair_id = entry.path.pair_id;
        for (std::size_t i = 1; i < entry.path.nodes.size(); ++i)
            spec.link_probs.push_back(g.find_link(entry.path.nodes[i - 1], entry.path.nodes[i])->success_prob);
        specs.push_back(std::move(spec));
    }

    double q = g.swap_prob();
    double sum = 0.0, sum_sq = 0.0;
    std::map<int, double> pair_sums;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(substream_seed(seed, t));
        int total = 0;
        for (const ChannelSpec& spec : specs) {
            int ok = 0;
            for (int c = 0; c < spec.copies; ++c) {
                bool alive = true;
                for (double p : spec.link_probs)
                    if (!rng.bernoulli(p)) alive = false;
                int swaps = static_cast<int>(spec.link_probs.size()) - 1;
                for (int s = 0; s < swaps; ++s)
                    if (!rng.bernoulli(q)) alive = false;
                if (alive) ++ok;
            }
            total += ok;
            if (spec.pair_id >= 0) pair_sums[spec.pair_id] += ok;
        }
        sum += total;
        sum_sq += static_cast<double>(total) * total;
    }

    McResult result;
    result.trials = trials;
    result.mean_throughput = sum / static_cast<double>(trials);
    if (trials > 1) {
        double var = (sum_sq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1);
        if (var < 0.0) var = 0.0;  // rounding on degenerate data
        result.std_error = std::sqrt(var / static_cast<double>(trials));
    }
    for (auto& [pair_id, s] : pair_sums) result.per_pair_means[pair_id] = s / static_cast<double>(trials);
    return result;
}

double analytic_throughput(const std::vector<PlanChannel>& plan) {
    double total = 0.0;
    for (const PlanChannel& entry : plan) total += entry.channels * entry.path.success_prob;
    return total;
}

}  // namespace entroute
