#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ltm/matrix.hpp"

namespace ltm {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

// Attributed graph over dense 0-based node ids. Adjacency stores in-neighbors:
// an edge (u, v) makes u visible from v; undirected graphs store both
// directions. Immutable after construction, safe for concurrent readers.
class Graph {
public:
    Graph() = default;

    // Node count is max id + 1 unless node_count >= 0 is given. Duplicate
    // edges collapse to one; self-loops are rejected. When features are
    // present their row count must equal the node count.
    static Graph from_edge_list(std::span<const Edge> edges, bool directed,
                                Matrix features = {}, NodeId node_count = -1);

    NodeId node_count() const { return static_cast<NodeId>(adjacency_.size()); }
    bool directed() const { return directed_; }
    std::size_t feature_dim() const { return features_.cols(); }

    // In-neighbors of v, ascending id order.
    std::span<const NodeId> neighbors(NodeId v) const;

    // Degree-centrality influence weight 1/|N(v)|; u must be in N(v).
    double influence_weight(NodeId u, NodeId v) const;

    std::span<const double> features_of(NodeId v) const;
    const Matrix& features() const { return features_; }

    // Returns a copy of this graph carrying the given per-node attributes.
    Graph with_features(Matrix features) const;

    // Canonical edge set: every directed pair, or each undirected edge once
    // with the smaller endpoint first.
    std::vector<Edge> edge_list() const;

    std::size_t edge_count() const;

private:
    void check_node(NodeId v) const;

    std::vector<std::vector<NodeId>> adjacency_;
    bool directed_ = false;
    Matrix features_;
};

}  // namespace ltm
