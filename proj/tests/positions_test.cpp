#include <gtest/gtest.h>

#include "support.hpp"

using namespace gpos;

namespace {

constexpr PositionKind kKinds[] = {PositionKind::general, PositionKind::outer, PositionKind::dual,
                                   PositionKind::total};

/// Literal definition: X-positionable pairs checked over every shortest path.
auto shortest_paths(const Graph & g, Vertex u, Vertex v) -> std::vector<std::vector<Vertex>>
{
    DistanceMatrix dm(g);
    std::vector<std::vector<Vertex>> result;
    std::vector<Vertex> path{u};
    auto extend = [&](auto && self, Vertex at) -> void {
        if (at == v) {
            result.push_back(path);
            return;
        }
        for (auto w : g.neighbours(at))
            if (dm(w, v) + 1 == dm(at, v)) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
    };
    extend(extend, u);
    return result;
}

auto positionable_by_paths(const Graph & g, const VertexSet & x, Vertex u, Vertex v) -> bool
{
    for (const auto & path : shortest_paths(g, u, v))
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (x.contains(path[i]))
                return false;
    return true;
}

} // namespace

TEST(Positionable, Examples)
{
    Betweenness p4(path_graph(4));
    EXPECT_FALSE(is_positionable(p4, VertexSet(4, {0, 1, 3}), 0, 3));
    EXPECT_TRUE(is_positionable(p4, VertexSet(4, {0, 1, 2, 3}), 1, 2));
    Betweenness c5(cycle_graph(5));
    EXPECT_TRUE(is_positionable(c5, VertexSet(5, {0, 2}), 0, 2));
}

TEST(Positionable, MatchesPathEnumeration)
{
    for (const auto & g : fixtures::connected_graphs(5)) {
        Betweenness bt(g);
        const auto n = g.order();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 3) {
            auto x = VertexSet::from_mask(n, mask);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    ASSERT_EQ(is_positionable(bt, x, u, v), positionable_by_paths(g, x, u, v));
        }
    }
}

TEST(Predicates, GeneralPositionExamples)
{
    Betweenness p4(path_graph(4));
    EXPECT_TRUE(is_general_position(p4, VertexSet(4, {0, 3})));
    EXPECT_FALSE(is_general_position(p4, VertexSet(4, {0, 2, 3})));
    Betweenness c5(cycle_graph(5));
    // 1 is the only inner vertex of the unique 0,2-geodesic.
    EXPECT_FALSE(is_general_position(c5, VertexSet(5, {0, 1, 2})));
    EXPECT_TRUE(is_general_position(c5, VertexSet(5, {0, 1, 3})));
}

TEST(Predicates, OuterDualTotalExamples)
{
    Betweenness p4(path_graph(4));
    VertexSet ends(4, {0, 3});
    EXPECT_TRUE(is_outer_gp(p4, ends));
    EXPECT_TRUE(is_dual_gp(p4, ends));
    EXPECT_TRUE(is_total_gp(p4, ends));
    Betweenness c5(cycle_graph(5));
    VertexSet x(5, {0, 2});
    EXPECT_TRUE(is_outer_gp(c5, x));
    EXPECT_FALSE(is_dual_gp(c5, x));
    for (const auto & g : fixtures::small_families()) {
        Betweenness bt(g);
        VertexSet none(g.order());
        EXPECT_TRUE(is_general_position(bt, none));
        EXPECT_TRUE(is_outer_gp(bt, none));
        EXPECT_TRUE(is_dual_gp(bt, none));
        EXPECT_TRUE(is_total_gp(bt, none));
    }
}

TEST(Predicates, Convexity)
{
    Betweenness p4(path_graph(4));
    EXPECT_TRUE(is_convex(p4, VertexSet(4, {1, 2})));
    Betweenness c5(cycle_graph(5));
    EXPECT_FALSE(is_convex(c5, VertexSet(5, {1, 3})));
    EXPECT_TRUE(is_convex(c5, VertexSet::full(5)));
}

TEST(Predicates, RequireConnected) { EXPECT_THROW(Betweenness(Graph(3)), DomainError); }

TEST(Search, Examples)
{
    EXPECT_EQ(gp_outer(cycle_graph(5)).size, 2u);
    EXPECT_EQ(gp_total(path_graph(4)).size, 2u);
    for (std::size_t s = 2; s <= 4; ++s)
        EXPECT_EQ(gp_outer(subdivided_star(s, 2)).size, s);
    EXPECT_EQ(gp_dual(cycle_plus(5)).size, 3u);
    EXPECT_EQ(gp_number(cycle_graph(5)).size, 3u);
    EXPECT_EQ(gp_dual(cycle_graph(6)).size, 0u);
    EXPECT_THROW(gp_number(Graph(2)), DomainError);
}

TEST(Search, WitnessesSatisfyTheirProperty)
{
    for (const auto & g : fixtures::small_families()) {
        Betweenness bt(g);
        for (auto kind : kKinds)
            for (auto engine : {Engine::characterization, Engine::oracle}) {
                auto r = position_number(g, bt, kind, engine);
                EXPECT_EQ(r.witness.size(), r.size);
                EXPECT_TRUE(satisfies(bt, kind, r.witness)) << to_string(kind);
            }
    }
}

TEST(Search, EnginesAgreeUpToEightVertices)
{
    std::vector<Graph> graphs = fixtures::connected_graphs(6);
    for (std::uint64_t seed = 1; seed <= 60; ++seed)
        graphs.push_back(random_connected(7 + seed % 2, 150 + 10 * (seed % 50), seed));
    for (const auto & g : graphs) {
        Betweenness bt(g);
        for (auto kind : kKinds)
            ASSERT_EQ(position_number(g, bt, kind, Engine::characterization).size,
                      position_number(g, bt, kind, Engine::oracle).size)
                << write_graph6(g) << " " << to_string(kind);
    }
}

TEST(Search, ExhaustiveMaximaOnSmallGraphs)
{
    for (const auto & g : fixtures::connected_graphs(5)) {
        Betweenness bt(g);
        std::size_t best[4] = {0, 0, 0, 0};
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
            auto x = VertexSet::from_mask(g.order(), mask);
            for (auto kind : kKinds)
                if (satisfies(bt, kind, x))
                    best[static_cast<int>(kind)] = std::max(best[static_cast<int>(kind)], x.size());
        }
        for (auto kind : kKinds)
            ASSERT_EQ(position_number(g, bt, kind, Engine::characterization).size, best[static_cast<int>(kind)]);
    }
}

TEST(Search, HereditaryWitnesses)
{
    for (const auto & g : fixtures::connected_graphs(6)) {
        if (g.order() < 6)
            continue;
        Betweenness bt(g);
        for (auto kind : {PositionKind::general, PositionKind::outer}) {
            auto w = position_number(g, bt, kind, Engine::characterization).witness;
            for (auto v : w) {
                auto smaller = w;
                smaller.erase(v);
                ASSERT_TRUE(satisfies(bt, kind, smaller));
            }
        }
    }
}

TEST(Search, MonotoneChain)
{
    for (const auto & g : fixtures::connected_graphs(6)) {
        Analysis a(g, {});
        EXPECT_LE(a.gp_t(), a.gp_o());
        EXPECT_LE(a.gp_o(), a.gp());
        EXPECT_LE(a.gp_t(), a.gp_d());
        EXPECT_LE(a.gp_d(), a.gp());
    }
}

TEST(Characterization, TotalIsSimplicial)
{
    for (const auto & g : fixtures::connected_graphs(5)) {
        Betweenness bt(g);
        auto s = simplicial_vertices(g);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
            auto x = VertexSet::from_mask(g.order(), mask);
            ASSERT_EQ(is_total_gp(bt, x), x.is_subset_of(s));
        }
    }
}

TEST(Characterization, OuterWitnessPairsAreMmd)
{
    for (const auto & g : fixtures::connected_graphs(6)) {
        DistanceMatrix dm(g);
        auto w = gp_outer(g).witness.to_vector();
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                ASSERT_TRUE(are_mmd(g, dm, w[i], w[j]));
        if (boundary(g, dm).b() > 0) {
            ASSERT_EQ(w.size(), max_clique(strong_resolving_graph(g, dm).pruned.graph).size);
        }
    }
}

TEST(Characterization, DualIsGpWithConvexComplement)
{
    for (const auto & g : fixtures::connected_graphs(6)) {
        Betweenness bt(g);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
            auto x = VertexSet::from_mask(g.order(), mask);
            ASSERT_EQ(is_dual_gp(bt, x), is_general_position(bt, x) && is_convex(bt, x.complement()));
        }
    }
}

TEST(Isometric, RestrictionExamples)
{
    auto c8 = cycle_graph(8);
    DistanceMatrix dm(c8);
    EXPECT_EQ(restrict_to_isometric_subgraph(c8, dm, VertexSet(8, {0, 1, 2, 3}), VertexSet(8, {0, 3, 5})),
              VertexSet(4, {0, 3}));
    EXPECT_THROW(restrict_to_isometric_subgraph(c8, dm, VertexSet(8, {0, 1, 2, 3, 4, 5}), VertexSet(8)),
                 DomainError);
    auto g = cycle_plus(5);
    DistanceMatrix dg(g);
    auto x = gp_dual(g).witness;
    EXPECT_EQ(restrict_to_isometric_subgraph(g, dg, VertexSet::full(g.order()), x), x);
}

TEST(Isometric, LayersInheritPositionSets)
{
    auto g = cycle_graph(5), h = path_graph(3);
    auto p = strong_product(g, h);
    DistanceMatrix dm(p.graph());
    Betweenness bt(p.graph());
    Betweenness bg(g);
    for (auto kind : kKinds) {
        auto x = position_number(p.graph(), bt, kind, Engine::characterization).witness;
        for (Vertex y = 0; y < h.order(); ++y) {
            auto sub = layer(p, Factor::left, y);
            EXPECT_TRUE(satisfies(bg, kind, restrict_to_isometric_subgraph(p.graph(), dm, sub, x)));
        }
    }
}

TEST(Analysis, CrossCheckAndCaching)
{
    Analysis a(cycle_plus(5), {});
    EXPECT_EQ(a.gp_d(), 3u);
    EXPECT_EQ(&a.position(PositionKind::dual), &a.position(PositionKind::dual));
    EXPECT_EQ(a.s(), 1u);
    EXPECT_EQ(a.diameter(), 3u);
    EXPECT_THROW(a.alpha_k(0), DomainError);
}

TEST(Invariants, BundleValues)
{
    auto c5 = compute_invariants(cycle_graph(5));
    ASSERT_TRUE(c5.metric);
    EXPECT_EQ(c5.metric->diam, 2u);
    EXPECT_EQ(c5.metric->simplicial.size(), 0u);
    EXPECT_EQ(c5.metric->boundary.b(), 5u);
    EXPECT_EQ(c5.metric->gp_o.size, 2u);
    auto k4 = compute_invariants(complete_graph(4));
    EXPECT_EQ(k4.metric->gp_t.size, 4u);
    EXPECT_EQ(k4.metric->gp_o.size, 4u);
    EXPECT_EQ(k4.metric->alpha_k.size(), 1u);
    EXPECT_THROW(compute_invariants(Graph(2)), DomainError);
    auto split = compute_invariants(Graph(2), {Engine::characterization, true});
    EXPECT_FALSE(split.connected);
    EXPECT_FALSE(split.metric);
}
