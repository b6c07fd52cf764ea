#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <gpos/error.hpp>
#include <gpos/vertex_set.hpp>

namespace gpos {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the labels 0..order()-1 with bitset rows.
///
/// Connectivity is not an invariant; operations that need it check it and
/// throw DomainError. The zero-order graph exists only as the result of
/// pruning (e.g. the pruned strong resolving graph of K1).
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

    Graph(std::size_t order, std::initializer_list<Edge> edges) : Graph(order)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    static auto from_edges(std::size_t order, const std::vector<Edge> & edges) -> Graph
    {
        Graph g(order);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto order() const -> std::size_t { return rows_.size(); }

    auto size() const -> std::size_t
    {
        std::size_t twice = 0;
        for (const auto & row : rows_)
            twice += row.size();
        return twice / 2;
    }

    auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].contains(v); }

    auto neighbours(Vertex v) const -> const VertexSet & { return rows_[v]; }

    auto closed_neighbourhood(Vertex v) const -> VertexSet
    {
        auto result = rows_[v];
        result.insert(v);
        return result;
    }

    auto degree(Vertex v) const -> std::size_t { return rows_[v].size(); }

    auto vertices() const -> VertexSet { return VertexSet::full(order()); }

    auto add_edge(Vertex u, Vertex v) -> void
    {
        if (u >= order() || v >= order())
            throw DomainError("edge endpoint out of range");
        if (u == v)
            throw DomainError("self-loops are not allowed");
        rows_[u].insert(v);
        rows_[v].insert(u);
    }

    auto remove_edge(Vertex u, Vertex v) -> void
    {
        rows_[u].erase(v);
        rows_[v].erase(u);
    }

    /// Edges as (u, v) with u < v, sorted.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Vertex u = 0; u < order(); ++u)
            for (auto v : rows_[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    friend auto operator==(const Graph & a, const Graph & b) -> bool { return a.rows_ == b.rows_; }

private:
    std::vector<VertexSet> rows_;
};

/// Induced subgraph with the map from its labels back to the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> labels;
};

inline auto complement(const Graph & g) -> Graph
{
    Graph result(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                result.add_edge(u, v);
    return result;
}

/// Vertices of g keep their labels; vertices of h are shifted by g.order().
inline auto disjoint_union(const Graph & g, const Graph & h) -> Graph
{
    Graph result(g.order() + h.order());
    for (auto [u, v] : g.edges())
        result.add_edge(u, v);
    auto shift = static_cast<Vertex>(g.order());
    for (auto [u, v] : h.edges())
        result.add_edge(u + shift, v + shift);
    return result;
}

inline auto join(const Graph & g, const Graph & h) -> Graph
{
    auto result = disjoint_union(g, h);
    auto shift = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            result.add_edge(u, v + shift);
    return result;
}

/// Subgraph induced by `subset`, relabelled in increasing order.
inline auto induced_subgraph(const Graph & g, const VertexSet & subset) -> InducedSubgraph
{
    InducedSubgraph result{Graph(subset.size()), subset.to_vector()};
    for (Vertex i = 0; i < result.labels.size(); ++i)
        for (Vertex j = i + 1; j < result.labels.size(); ++j)
            if (g.adjacent(result.labels[i], result.labels[j]))
                result.graph.add_edge(i, j);
    return result;
}

/// Drops isolated vertices.
inline auto prune_isolated(const Graph & g) -> InducedSubgraph
{
    VertexSet keep(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0)
            keep.insert(v);
    return induced_subgraph(g, keep);
}

inline auto are_true_twins(const Graph & g, Vertex u, Vertex v) -> bool
{
    return u != v && g.adjacent(u, v) && g.closed_neighbourhood(u) == g.closed_neighbourhood(v);
}

inline auto true_twin_pairs(const Graph & g) -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (auto [u, v] : g.edges())
        if (are_true_twins(g, u, v))
            result.emplace_back(u, v);
    return result;
}

inline auto is_twin_free(const Graph & g) -> bool { return true_twin_pairs(g).empty(); }

/// Deletes every edge joining a true-twin pair of the original graph (one pass).
inline auto remove_true_twin_edges(const Graph & g) -> Graph
{
    auto result = g;
    for (auto [u, v] : true_twin_pairs(g))
        result.remove_edge(u, v);
    return result;
}

inline auto is_clique(const Graph & g, const VertexSet & members) -> bool
{
    for (auto v : members) {
        auto others = members;
        others.erase(v);
        if (! others.is_subset_of(g.neighbours(v)))
            return false;
    }
    return true;
}

inline auto is_simplicial(const Graph & g, Vertex v) -> bool { return is_clique(g, g.neighbours(v)); }

inline auto simplicial_vertices(const Graph & g) -> VertexSet
{
    VertexSet result(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (is_simplicial(g, v))
            result.insert(v);
    return result;
}

struct BasicCounts {
    std::size_t order = 0;
    std::size_t leaves = 0;
    std::size_t max_degree = 0;
};

inline auto basic_counts(const Graph & g) -> BasicCounts
{
    BasicCounts counts{g.order(), 0, 0};
    for (Vertex v = 0; v < g.order(); ++v) {
        auto d = g.degree(v);
        if (d == 1)
            ++counts.leaves;
        counts.max_degree = std::max(counts.max_degree, d);
    }
    return counts;
}

inline auto is_complete(const Graph & g) -> bool
{
    return g.size() * 2 == g.order() * (g.order() == 0 ? 0 : g.order() - 1);
}

inline auto has_universal_vertex(const Graph & g) -> bool
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 == g.order())
            return true;
    return false;
}

inline auto component_of(const Graph & g, Vertex start) -> VertexSet
{
    VertexSet seen(g.order());
    seen.insert(start);
    auto frontier = seen;
    while (! frontier.empty()) {
        VertexSet next(g.order());
        for (auto v : frontier)
            next |= g.neighbours(v);
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

/// K1 is connected; the zero-order graph is not.
inline auto is_connected(const Graph & g) -> bool
{
    return g.order() > 0 && component_of(g, 0).size() == g.order();
}

/// Vertex sets of the biconnected components (blocks). Isolated vertices
/// form singleton blocks.
inline auto blocks(const Graph & g) -> std::vector<VertexSet>
{
    const auto n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> result;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::vector<Vertex> pending;
        std::size_t next = 0;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        if (g.degree(root) == 0) {
            result.push_back(VertexSet(n, {root}));
            disc[root] = timer++;
            continue;
        }
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back(Frame{root, root, g.neighbours(root).to_vector()});
        while (! stack.empty()) {
            auto & frame = stack.back();
            if (frame.next < frame.pending.size()) {
                auto w = frame.pending[frame.next++];
                if (disc[w] == -1) {
                    edge_stack.emplace_back(frame.v, w);
                    disc[w] = low[w] = timer++;
                    auto v = frame.v;
                    stack.push_back(Frame{w, v, g.neighbours(w).to_vector()});
                }
                else if (w != frame.parent && disc[w] < disc[frame.v]) {
                    edge_stack.emplace_back(frame.v, w);
                    low[frame.v] = std::min(low[frame.v], disc[w]);
                }
                continue;
            }
            auto v = frame.v, parent = frame.parent;
            stack.pop_back();
            if (stack.empty())
                break;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                VertexSet block(n);
                while (! edge_stack.empty()) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block.insert(e.first);
                    block.insert(e.second);
                    if (e == Edge{parent, v})
                        break;
                }
                result.push_back(std::move(block));
            }
        }
    }
    return result;
}

/// Connected graph whose blocks all induce cliques.
inline auto is_block_graph(const Graph & g) -> bool
{
    if (! is_connected(g))
        return false;
    auto all = blocks(g);
    return std::all_of(all.begin(), all.end(), [&](const VertexSet & b) { return is_clique(g, b); });
}

} // namespace gpos
