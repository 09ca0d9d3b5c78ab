#include "ltm/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace ltm {

namespace {

Graph build_undirected(std::vector<Edge> edges, NodeId n) {
    return Graph::from_edge_list(edges, /*directed=*/false, {}, n);
}

Graph gen_erdos_renyi(NodeId n, double p, Rng& rng) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("erdos_renyi: need 0 < p < 1");
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    return build_undirected(std::move(edges), n);
}

Graph gen_pref_attach(NodeId n, NodeId k, Rng& rng) {
    if (k < 1 || k >= n) throw std::invalid_argument("pref_attach: need 1 <= k < n");
    std::vector<Edge> edges;
    // First arrival connects to all k initial nodes; afterwards targets are
    // sampled proportionally to degree via the repeated-endpoints multiset.
    std::vector<NodeId> repeated;
    std::vector<NodeId> targets(static_cast<std::size_t>(k));
    for (NodeId i = 0; i < k; ++i) targets[static_cast<std::size_t>(i)] = i;
    for (NodeId source = k; source < n; ++source) {
        for (const NodeId t : targets) {
            edges.emplace_back(source, t);
            repeated.push_back(t);
            repeated.push_back(source);
        }
        if (source + 1 >= n) break;
        std::set<NodeId> picked;
        while (static_cast<NodeId>(picked.size()) < k) {
            picked.insert(repeated[rng.below(repeated.size())]);
        }
        targets.assign(picked.begin(), picked.end());
    }
    return build_undirected(std::move(edges), n);
}

Graph gen_forest_fire(NodeId n, double fwd, double back, Rng& rng) {
    if (fwd <= 0.0 || fwd >= 1.0) throw std::invalid_argument("forest_fire: need 0 < fwd < 1");
    if (back < 0.0 || back >= 1.0) throw std::invalid_argument("forest_fire: need 0 <= back < 1");
    std::vector<std::vector<NodeId>> out_links(static_cast<std::size_t>(n));
    std::vector<std::vector<NodeId>> in_links(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> burned;

    auto pick_unvisited = [&](const std::vector<NodeId>& candidates, std::uint64_t want,
                              std::deque<NodeId>& queue) {
        std::vector<NodeId> fresh;
        for (const NodeId c : candidates) {
            if (!visited[static_cast<std::size_t>(c)]) fresh.push_back(c);
        }
        rng.shuffle(fresh);
        const std::size_t take = std::min<std::size_t>(fresh.size(), want);
        for (std::size_t i = 0; i < take; ++i) {
            visited[static_cast<std::size_t>(fresh[i])] = 1;
            burned.push_back(fresh[i]);
            queue.push_back(fresh[i]);
        }
    };

    for (NodeId v = 1; v < n; ++v) {
        const NodeId ambassador = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(v)));
        burned.clear();
        std::deque<NodeId> queue;
        visited[static_cast<std::size_t>(ambassador)] = 1;
        burned.push_back(ambassador);
        queue.push_back(ambassador);
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            pick_unvisited(out_links[static_cast<std::size_t>(u)], rng.geometric(fwd), queue);
            pick_unvisited(in_links[static_cast<std::size_t>(u)], rng.geometric(back), queue);
        }
        for (const NodeId w : burned) {
            out_links[static_cast<std::size_t>(v)].push_back(w);
            in_links[static_cast<std::size_t>(w)].push_back(v);
            edges.emplace_back(v, w);
            visited[static_cast<std::size_t>(w)] = 0;
        }
    }
    return build_undirected(std::move(edges), n);
}

Graph gen_watts_strogatz(NodeId n, NodeId k, double beta, Rng& rng) {
    if (k <= 0 || k >= n || k % 2 != 0) {
        throw std::invalid_argument("watts_strogatz: need even k with 0 < k < n");
    }
    if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("watts_strogatz: need 0 <= rewire <= 1");
    auto canonical = [](NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    std::set<Edge> edge_set;
    for (NodeId j = 1; j <= k / 2; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            edge_set.insert(canonical(u, (u + j) % n));
        }
    }
    for (NodeId j = 1; j <= k / 2; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            const NodeId v = (u + j) % n;
            if (!rng.bernoulli(beta)) continue;
            // Keep the original edge when no valid rewiring target shows up.
            for (int attempt = 0; attempt < 2 * n; ++attempt) {
                const NodeId w = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
                if (w == u || edge_set.count(canonical(u, w)) != 0) continue;
                edge_set.erase(canonical(u, v));
                edge_set.insert(canonical(u, w));
                break;
            }
        }
    }
    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    return build_undirected(std::move(edges), n);
}

}  // namespace

Graph gen_graph(GraphModel model, NodeId n, const GraphParams& params, std::uint64_t rng_seed) {
    if (n < 2) throw std::invalid_argument("gen_graph: need n >= 2");
    Rng rng(rng_seed);
    switch (model) {
        case GraphModel::erdos_renyi:
            return gen_erdos_renyi(n, params.edge_prob, rng);
        case GraphModel::pref_attach:
            return gen_pref_attach(n, params.attach_count, rng);
        case GraphModel::forest_fire:
            return gen_forest_fire(n, params.forward_prob, params.backward_prob, rng);
        case GraphModel::watts_strogatz:
            return gen_watts_strogatz(n, params.ring_neighbors, params.rewire_prob, rng);
    }
    throw std::invalid_argument("gen_graph: unknown model");
}

Matrix gen_attributes(NodeId n, std::size_t m, std::uint64_t rng_seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("gen_attributes: need n, m >= 1");
    Rng rng(rng_seed);
    Matrix x(static_cast<std::size_t>(n), m);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            x.at(i, j) = rng.normal();
        }
    }
    return x;
}

LinearSchemeDraw draw_linear_scheme(std::size_t feature_dim, Rng& rng) {
    constexpr std::int32_t kActiveAttributes = 10;
    if (feature_dim < kActiveAttributes) {
        throw std::invalid_argument("linear scheme requires at least 10 attributes");
    }
    LinearSchemeDraw draw;
    draw.attribute_indices =
        rng.sample_without_replacement(static_cast<std::int32_t>(feature_dim), kActiveAttributes);
    draw.coefficients.reserve(kActiveAttributes);
    for (std::int32_t i = 0; i < kActiveAttributes; ++i) draw.coefficients.push_back(rng.normal());
    return draw;
}

ThresholdAssignment gen_thresholds(ThresholdScheme scheme, const Matrix& features,
                                   std::uint64_t rng_seed) {
    const std::size_t n = features.rows();
    if (n == 0) throw std::invalid_argument("gen_thresholds: empty feature matrix");
    Rng rng(rng_seed);
    ThresholdAssignment out;
    out.scheme = scheme;
    out.thresholds.resize(n);

    if (scheme == ThresholdScheme::linear) {
        const LinearSchemeDraw draw = draw_linear_scheme(features.cols(), rng);
        std::vector<double> scores(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < draw.attribute_indices.size(); ++j) {
                s += draw.coefficients[j] *
                     features.at(i, static_cast<std::size_t>(draw.attribute_indices[j]));
            }
            scores[i] = s;
        }
        const auto [lo_it, hi_it] = std::minmax_element(scores.begin(), scores.end());
        const double lo = *lo_it, hi = *hi_it;
        if (hi - lo <= 0.0) {
            throw std::domain_error("linear scheme: constant scores, cannot normalize");
        }
        for (std::size_t i = 0; i < n; ++i) {
            out.thresholds[i] = std::max(kThetaEps, (scores[i] - lo) / (hi - lo));
        }
        return out;
    }

    if (scheme == ThresholdScheme::quadrant) {
        if (features.cols() < 2) throw std::invalid_argument("quadrant scheme requires m >= 2");
        double cell_theta[4];
        for (double& t : cell_theta) t = std::max(kThetaEps, rng.uniform01());
        for (std::size_t i = 0; i < n; ++i) {
            const int cell = (features.at(i, 0) >= 0.0 ? 1 : 0) | (features.at(i, 1) >= 0.0 ? 2 : 0);
            out.thresholds[i] = cell_theta[cell];
        }
        return out;
    }

    throw std::invalid_argument("gen_thresholds: external thresholds are file-ingested");
}

std::vector<NodeId> seed_activations(NodeId n, NodeId count, std::uint64_t rng_seed) {
    if (n < 1 || count < 1) throw std::invalid_argument("seed_activations: need n, count >= 1");
    if (count > n) throw std::invalid_argument("seed_activations: count exceeds node count");
    Rng rng(rng_seed);
    return rng.sample_without_replacement(n, count);
}

}  // namespace ltm
