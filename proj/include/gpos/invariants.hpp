#pragma once

#include <optional>
#include <vector>

#include <gpos/clique.hpp>
#include <gpos/derived.hpp>
#include <gpos/distance.hpp>
#include <gpos/graph.hpp>
#include <gpos/position_search.hpp>

namespace gpos {

struct InvariantOptions {
    Engine engine = Engine::characterization;
    bool allow_disconnected = false;
};

/// Structure-level fields are always present; the metric and position
/// fields are filled only for connected graphs.
struct InvariantBundle {
    std::size_t n = 0;
    std::size_t n_1 = 0;
    std::size_t max_degree = 0;
    bool connected = false;

    struct Metric {
        std::size_t diam = 0;
        VertexSet simplicial;
        BoundaryReport boundary;
        CliqueResult omega;
        CliqueResult alpha;
        /// alpha_k[k - 1] for k = 1..max(diam, 1).
        std::vector<CliqueResult> alpha_k;
        PositionResult gp, gp_t, gp_o, gp_d;
    };
    std::optional<Metric> metric;
};

inline auto compute_invariants(const Graph & g, const InvariantOptions & options = {}) -> InvariantBundle
{
    InvariantBundle bundle;
    auto counts = basic_counts(g);
    bundle.n = counts.order;
    bundle.n_1 = counts.leaves;
    bundle.max_degree = counts.max_degree;
    bundle.connected = is_connected(g);
    if (! bundle.connected) {
        if (! options.allow_disconnected)
            throw DomainError("invariants: graph is disconnected");
        return bundle;
    }

    Betweenness bt(g);
    const auto & dm = bt.distances();
    InvariantBundle::Metric m;
    m.diam = dm.diameter();
    m.simplicial = simplicial_vertices(g);
    m.boundary = boundary(g, dm);
    m.omega = max_clique(g);
    m.alpha = independence_number(g);
    for (std::size_t k = 1; k <= std::max<std::size_t>(m.diam, 1); ++k)
        m.alpha_k.push_back(max_clique(distance_exceeds_graph(dm, k)));
    m.gp = position_number(g, bt, PositionKind::general, options.engine);
    m.gp_t = position_number(g, bt, PositionKind::total, options.engine);
    m.gp_o = position_number(g, bt, PositionKind::outer, options.engine);
    m.gp_d = position_number(g, bt, PositionKind::dual, options.engine);
    bundle.metric = std::move(m);
    return bundle;
}

} // namespace gpos
