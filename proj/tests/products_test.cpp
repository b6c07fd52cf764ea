#include <algorithm>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace gpos;

namespace {

auto degree_multiset(const Graph & g)
{
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < g.order(); ++v)
        degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

auto factor_pairs() -> std::vector<std::pair<Graph, Graph>>
{
    std::vector<Graph> base;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto & g : enumerate_connected(n))
            base.push_back(std::move(g));
    base.push_back(cycle_graph(5));
    base.push_back(cycle_plus(5));
    std::vector<std::pair<Graph, Graph>> pairs;
    for (std::size_t i = 0; i < base.size(); i += 3)
        for (std::size_t j = 0; j < base.size(); j += 2)
            pairs.emplace_back(base[i], base[j]);
    return pairs;
}

} // namespace

TEST(StrongProduct, Examples)
{
    EXPECT_EQ(strong_product(path_graph(2), path_graph(2)).graph(), complete_graph(4));
    auto p = strong_product(cycle_graph(5), cycle_graph(5));
    EXPECT_EQ(p.graph().order(), 25u);
    EXPECT_EQ(diameter(p.graph()), 2u);
    EXPECT_EQ(DistanceMatrix(p.graph())(p.encode(0, 0), p.encode(2, 1)), 2u);
}

TEST(StrongProduct, DistanceIsMaxOfFactors)
{
    for (const auto & [g, h] : factor_pairs()) {
        auto p = strong_product(g, h);
        DistanceMatrix dp(p.graph()), dg(g), dh(h);
        for (Vertex u = 0; u < p.graph().order(); ++u)
            for (Vertex v = 0; v < p.graph().order(); ++v) {
                auto [a, b] = p.decode(u);
                auto [c, d] = p.decode(v);
                ASSERT_EQ(dp(u, v), std::max(dg(a, c), dh(b, d)));
            }
    }
}

TEST(StrongProduct, ClosedNeighbourhoodIsProduct)
{
    for (const auto & [g, h] : factor_pairs()) {
        auto p = strong_product(g, h);
        for (Vertex v = 0; v < p.graph().order(); ++v) {
            auto [a, b] = p.decode(v);
            EXPECT_EQ(p.graph().closed_neighbourhood(v),
                      cartesian_set(p, g.closed_neighbourhood(a), h.closed_neighbourhood(b)));
        }
    }
}

TEST(StrongProduct, SwapCodecIsIsomorphism)
{
    for (const auto & [g, h] : factor_pairs()) {
        auto gh = strong_product(g, h), hg = strong_product(h, g);
        auto swap = [&](Vertex v) {
            auto [a, b] = gh.decode(v);
            return hg.encode(b, a);
        };
        for (Vertex u = 0; u < gh.graph().order(); ++u)
            for (Vertex v = 0; v < gh.graph().order(); ++v)
                ASSERT_EQ(gh.graph().adjacent(u, v), hg.graph().adjacent(swap(u), swap(v)));
    }
}

TEST(StrongProduct, ConnectedFactorsGiveConnectedProducts)
{
    for (const auto & [g, h] : factor_pairs()) {
        EXPECT_TRUE(is_connected(strong_product(g, h).graph()));
        EXPECT_TRUE(is_connected(lexicographic_product(g, h).graph()));
    }
}

TEST(LexProduct, Examples)
{
    EXPECT_EQ(lexicographic_product(path_graph(2), path_graph(2)).graph(), complete_graph(4));
    auto g = cycle_plus(5);
    EXPECT_EQ(lexicographic_product(g, complete_graph(1)).graph(), g);
    auto p = lexicographic_product(path_graph(3), Graph(2));
    EXPECT_EQ(p.graph().order(), 6u);
    EXPECT_FALSE(p.graph().adjacent(p.encode(1, 0), p.encode(1, 1)));
    EXPECT_TRUE(p.graph().adjacent(p.encode(0, 1), p.encode(1, 0)));
}

TEST(LexProduct, AdjacencyRule)
{
    for (const auto & [g, h] : factor_pairs()) {
        auto p = lexicographic_product(g, h);
        for (Vertex u = 0; u < p.graph().order(); ++u)
            for (Vertex v = 0; v < p.graph().order(); ++v) {
                auto [a, b] = p.decode(u);
                auto [c, d] = p.decode(v);
                ASSERT_EQ(p.graph().adjacent(u, v), g.adjacent(a, c) || (a == c && h.adjacent(b, d)));
            }
    }
}

TEST(LexProduct, NotCommutative)
{
    auto a = lexicographic_product(path_graph(3), path_graph(2)).graph();
    auto b = lexicographic_product(path_graph(2), path_graph(3)).graph();
    EXPECT_NE(degree_multiset(a), degree_multiset(b));
}

TEST(Products, CapIsEnforced)
{
    EXPECT_THROW(strong_product(path_graph(10), path_graph(10), 99), CapacityError);
    EXPECT_NO_THROW(strong_product(path_graph(10), path_graph(10), 100));
    EXPECT_THROW(product(ProductKind::lexicographic, cycle_graph(70), cycle_graph(70)), CapacityError);
}

TEST(Projection, Examples)
{
    auto p = lexicographic_product(path_graph(3), path_graph(2));
    EXPECT_EQ(project(p, VertexSet(6, {p.encode(0, 0), p.encode(0, 1)}), Factor::left), VertexSet(3, {0}));
    EXPECT_TRUE(project(p, VertexSet(6), Factor::left).empty());
    EXPECT_EQ(project(p, VertexSet::full(6), Factor::right), VertexSet::full(2));
}

TEST(Layers, Examples)
{
    auto p = strong_product(path_graph(3), path_graph(2));
    EXPECT_EQ(layer(p, Factor::right, 0), VertexSet(6, {p.encode(0, 0), p.encode(0, 1)}));
    auto g_layer = layer(p, Factor::left, 1);
    EXPECT_EQ(g_layer.size(), 3u);
    EXPECT_EQ(induced_subgraph(p.graph(), g_layer).graph, path_graph(3));
    VertexSet covered(6);
    for (Vertex h = 0; h < 2; ++h) {
        auto l = layer(p, Factor::left, h);
        EXPECT_FALSE(covered.intersects(l));
        covered |= l;
    }
    EXPECT_EQ(covered, VertexSet::full(6));
    EXPECT_THROW(layer(p, Factor::left, 2), DomainError);
}

TEST(Layers, InduceFactorCopies)
{
    for (const auto & [g, h] : factor_pairs())
        for (auto kind : {ProductKind::strong, ProductKind::lexicographic}) {
            auto p = product(kind, g, h);
            for (Vertex y = 0; y < h.order(); ++y)
                EXPECT_EQ(induced_subgraph(p.graph(), layer(p, Factor::left, y)).graph, g);
            for (Vertex x = 0; x < g.order(); ++x)
                EXPECT_EQ(induced_subgraph(p.graph(), layer(p, Factor::right, x)).graph, h);
        }
}
