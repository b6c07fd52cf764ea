#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include <gpos/clique.hpp>
#include <gpos/distance.hpp>
#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

/// u is maximally distant from v: no neighbour of u is farther from v than u.
/// Not symmetric.
inline auto is_maximally_distant(const Graph & g, const DistanceMatrix & dm, Vertex u, Vertex v) -> bool
{
    dm.require_connected("is_maximally_distant");
    const auto d = dm(u, v);
    for (auto w : g.neighbours(u))
        if (dm(v, w) > d)
            return false;
    return true;
}

/// Mutually maximally distant; only distinct vertices qualify.
inline auto are_mmd(const Graph & g, const DistanceMatrix & dm, Vertex u, Vertex v) -> bool
{
    return u != v && is_maximally_distant(g, dm, u, v) && is_maximally_distant(g, dm, v, u);
}

/// Row v holds every vertex MMD with v.
inline auto mmd_relation(const Graph & g, const DistanceMatrix & dm) -> std::vector<VertexSet>
{
    dm.require_connected("mmd_relation");
    const auto n = g.order();
    // far[u] = vertices v such that u is maximally distant from v.
    std::vector<VertexSet> far(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            bool maximal = true;
            for (auto w : g.neighbours(u))
                if (dm(v, w) > dm(u, v)) {
                    maximal = false;
                    break;
                }
            if (maximal && u != v)
                far[u].insert(v);
        }
    std::vector<VertexSet> result(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u)
        for (auto v : far[u])
            if (far[v].contains(u))
                result[u].insert(v);
    return result;
}

struct BoundaryReport {
    std::vector<Edge> mmd_pairs;
    VertexSet boundary;

    auto b() const -> std::size_t { return boundary.size(); }
};

inline auto boundary(const Graph & g, const DistanceMatrix & dm) -> BoundaryReport
{
    auto relation = mmd_relation(g, dm);
    BoundaryReport report{{}, VertexSet(g.order())};
    for (Vertex u = 0; u < g.order(); ++u)
        for (auto v : relation[u])
            if (u < v) {
                report.mmd_pairs.emplace_back(u, v);
                report.boundary.insert(u);
                report.boundary.insert(v);
            }
    return report;
}

inline auto boundary(const Graph & g) -> BoundaryReport { return boundary(g, DistanceMatrix(g)); }

/// G_SR on V(G) (edges are the MMD pairs) and G_SR' on the boundary.
struct StrongResolvingGraph {
    Graph full;
    InducedSubgraph pruned;
};

inline auto strong_resolving_graph(const Graph & g, const DistanceMatrix & dm) -> StrongResolvingGraph
{
    auto full = Graph::from_edges(g.order(), boundary(g, dm).mmd_pairs);
    auto pruned = prune_isolated(full);
    return {std::move(full), std::move(pruned)};
}

inline auto strong_resolving_graph(const Graph & g) -> StrongResolvingGraph
{
    return strong_resolving_graph(g, DistanceMatrix(g));
}

/// Joins pairs at distance at least 2 and true-twin pairs; isolated
/// vertices are kept (apply prune_isolated for the primed variant).
inline auto g2bar(const Graph & g, const DistanceMatrix & dm) -> Graph
{
    dm.require_connected("g2bar");
    Graph result(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (dm(u, v) >= 2 || are_true_twins(g, u, v))
                result.add_edge(u, v);
    return result;
}

inline auto g2bar(const Graph & g) -> Graph { return g2bar(g, DistanceMatrix(g)); }

/// TF-boundary and the strong resolving TF-graph (SRS). `full` lives on
/// V(G) with the non-twin MMD pairs as edges; `srs` is its restriction to
/// the TF-boundary.
struct TfBoundary {
    VertexSet vertices;
    Graph full;
    InducedSubgraph srs;
};

inline auto tf_boundary_and_srs(const Graph & g, const DistanceMatrix & dm) -> TfBoundary
{
    dm.require_connected("tf_boundary_and_srs");
    if (is_complete(g))
        throw DomainError("tf_boundary_and_srs: the TF-boundary is defined for non-complete graphs only");
    auto relation = mmd_relation(g, dm);
    Graph full(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (auto v : relation[u])
            if (u < v && ! are_true_twins(g, u, v))
                full.add_edge(u, v);
    auto srs = prune_isolated(full);
    auto vertices = VertexSet::from_range(g.order(), srs.labels);
    return {std::move(vertices), std::move(full), std::move(srs)};
}

inline auto tf_boundary_and_srs(const Graph & g) -> TfBoundary { return tf_boundary_and_srs(g, DistanceMatrix(g)); }

/// Which disjunct of the strong-product MMD characterisation applies.
enum class MmdCase { none, both_mmd, left_mmd_right_equal, right_mmd_left_equal, left_mmd_left_farther, right_mmd_right_farther };

inline auto to_string(MmdCase c) -> std::string_view
{
    switch (c) {
    case MmdCase::none:
        return "none";
    case MmdCase::both_mmd:
        return "i";
    case MmdCase::left_mmd_right_equal:
        return "ii";
    case MmdCase::right_mmd_left_equal:
        return "iii";
    case MmdCase::left_mmd_left_farther:
        return "iv";
    case MmdCase::right_mmd_right_farther:
        return "v";
    }
    return "?";
}

/// Factor data reused across many product-pair queries.
struct MmdFactor {
    DistanceMatrix distances;
    std::vector<VertexSet> mmd;

    explicit MmdFactor(const Graph & g) : distances(g)
    {
        distances.require_connected("check_mmd_product_cases");
        mmd = mmd_relation(g, distances);
    }
};

/// Evaluates the five conditions on the factors for (g,h), (g',h') and
/// returns the first that holds, in order i..v.
inline auto check_mmd_product_cases(const MmdFactor & left, const MmdFactor & right, std::pair<Vertex, Vertex> first,
                                    std::pair<Vertex, Vertex> second) -> MmdCase
{
    auto [g, h] = first;
    auto [g2, h2] = second;
    const bool left_mmd = left.mmd[g].contains(g2);
    const bool right_mmd = right.mmd[h].contains(h2);
    const auto dl = left.distances(g, g2);
    const auto dr = right.distances(h, h2);
    if (left_mmd && right_mmd)
        return MmdCase::both_mmd;
    if (left_mmd && h == h2)
        return MmdCase::left_mmd_right_equal;
    if (right_mmd && g == g2)
        return MmdCase::right_mmd_left_equal;
    if (left_mmd && dl > dr)
        return MmdCase::left_mmd_left_farther;
    if (right_mmd && dl < dr)
        return MmdCase::right_mmd_right_farther;
    return MmdCase::none;
}

inline auto check_mmd_product_cases(const Graph & g, const Graph & h, std::pair<Vertex, Vertex> first,
                                    std::pair<Vertex, Vertex> second) -> MmdCase
{
    return check_mmd_product_cases(MmdFactor(g), MmdFactor(h), first, second);
}

} // namespace gpos
