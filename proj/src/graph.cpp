#include "ltm/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ltm {

Graph Graph::from_edge_list(std::span<const Edge> edges, bool directed,
                            Matrix features, NodeId node_count) {
    NodeId max_id = -1;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0) throw std::invalid_argument("edge ids must be non-negative");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        max_id = std::max(max_id, std::max(u, v));
    }

    NodeId n = node_count >= 0 ? node_count : max_id + 1;
    if (node_count >= 0 && max_id >= node_count) {
        throw std::invalid_argument("edge id " + std::to_string(max_id) +
                                    " exceeds node count " + std::to_string(node_count));
    }
    if (features.rows() > 0) {
        if (node_count < 0) {
            if (features.rows() != static_cast<std::size_t>(max_id + 1)) {
                throw std::invalid_argument("feature row count must equal max node id + 1");
            }
        } else if (features.rows() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("feature row count must equal node count");
        }
        n = static_cast<NodeId>(features.rows());
    }

    Graph g;
    g.directed_ = directed;
    g.features_ = std::move(features);
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
        if (!directed) g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

void Graph::check_node(NodeId v) const {
    if (v < 0 || v >= node_count()) {
        throw std::invalid_argument("node id " + std::to_string(v) + " out of range");
    }
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    check_node(v);
    return adjacency_[static_cast<std::size_t>(v)];
}

double Graph::influence_weight(NodeId u, NodeId v) const {
    check_node(u);
    const auto nbrs = neighbors(v);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), u)) {
        throw std::invalid_argument("influence_weight: " + std::to_string(u) +
                                    " is not a neighbor of " + std::to_string(v));
    }
    return 1.0 / static_cast<double>(nbrs.size());
}

std::span<const double> Graph::features_of(NodeId v) const {
    check_node(v);
    if (features_.cols() == 0) return {};
    return features_.row(static_cast<std::size_t>(v));
}

Graph Graph::with_features(Matrix features) const {
    if (features.rows() != static_cast<std::size_t>(node_count())) {
        throw std::invalid_argument("with_features: row count must equal node count");
    }
    Graph g = *this;
    g.features_ = std::move(features);
    return g;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < node_count(); ++v) {
        for (const NodeId u : adjacency_[static_cast<std::size_t>(v)]) {
            if (directed_) {
                edges.emplace_back(u, v);
            } else if (u < v) {
                edges.emplace_back(u, v);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nbrs : adjacency_) total += nbrs.size();
    return directed_ ? total : total / 2;
}

}  // namespace ltm
