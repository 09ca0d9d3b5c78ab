#pragma once

#include <vector>

#include "ltm/graph.hpp"
#include "ltm/synthgen.hpp"

namespace ltm {

// Sorted, duplicate-free node ids.
using NodeSet = std::vector<NodeId>;

inline constexpr int kNeverActivated = -1;

struct DiffusionTrace {
    std::vector<NodeSet> active_sets;  // D_0 .. D_T, monotone under inclusion
    std::vector<int> activation_time;  // per node; kNeverActivated if none
    int horizon() const { return static_cast<int>(active_sets.size()) - 1; }
};

// Weighted proportion of v's in-neighbors present in `active`; 0 for
// isolated nodes.
double activation_influence(const Graph& g, NodeId v, const NodeSet& active);

// One synchronous update: every influence read targets the input set.
// Active nodes stay active; an inactive node joins when its activation
// influence reaches its threshold.
NodeSet step(const Graph& g, const ThresholdAssignment& thresholds, const NodeSet& active);

// Runs `horizon` synchronous steps from the seed set, stopping early at a
// fixed point and padding the remaining sets by repetition.
DiffusionTrace simulate(const Graph& g, const ThresholdAssignment& thresholds,
                        const NodeSet& seeds, int horizon);

}  // namespace ltm
