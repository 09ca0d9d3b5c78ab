#pragma once

#include <cstdint>
#include <vector>

#include "ltm/graph.hpp"
#include "ltm/matrix.hpp"
#include "ltm/rng.hpp"

namespace ltm {

enum class GraphModel { erdos_renyi, pref_attach, forest_fire, watts_strogatz };

struct GraphParams {
    double edge_prob = 0.1;      // erdos_renyi: 0 < p < 1
    NodeId attach_count = 4;     // pref_attach: 1 <= k < n
    double forward_prob = 0.2;   // forest_fire: 0 < f < 1
    double backward_prob = 0.1;  // forest_fire
    NodeId ring_neighbors = 4;   // watts_strogatz: even, 0 < k < n
    double rewire_prob = 0.1;    // watts_strogatz
};

// All four generators produce undirected graphs without features and are
// pure functions of (model, n, params, rng_seed).
Graph gen_graph(GraphModel model, NodeId n, const GraphParams& params, std::uint64_t rng_seed);

// n x m matrix of iid standard normal attributes.
Matrix gen_attributes(NodeId n, std::size_t m, std::uint64_t rng_seed);

enum class ThresholdScheme { linear, quadrant, external };

// Lower clamp keeps thresholds strictly positive so a node never
// self-activates under zero influence.
inline constexpr double kThetaEps = 1e-6;

struct ThresholdAssignment {
    std::vector<double> thresholds;  // per node, each in [kThetaEps, 1]
    ThresholdScheme scheme = ThresholdScheme::external;
};

// Attribute subset and coefficients behind the linear scheme; exposed so the
// sparsity contract is checkable.
struct LinearSchemeDraw {
    std::vector<std::int32_t> attribute_indices;  // 10 distinct, ascending
    std::vector<double> coefficients;             // aligned with indices
};

LinearSchemeDraw draw_linear_scheme(std::size_t feature_dim, Rng& rng);

// linear: scores from a sparse random linear model over 10 attributes,
// min-max normalized over the population. quadrant: one U(0,1) threshold per
// sign-quadrant of the first two attributes (value >= 0 counts as positive).
ThresholdAssignment gen_thresholds(ThresholdScheme scheme, const Matrix& features,
                                   std::uint64_t rng_seed);

// count nodes sampled uniformly without replacement, ascending.
std::vector<NodeId> seed_activations(NodeId n, NodeId count, std::uint64_t rng_seed);

}  // namespace ltm
