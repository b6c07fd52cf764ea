#include <gtest/gtest.h>

#include "support.hpp"

using namespace gpos;

TEST(VertexSet, BasicOperations)
{
    VertexSet a(130, {0, 5, 64, 129});
    EXPECT_EQ(a.size(), 4u);
    EXPECT_TRUE(a.contains(129));
    EXPECT_FALSE(a.contains(1));
    EXPECT_EQ(a.first(), 0u);
    a.erase(0);
    EXPECT_EQ(a.first(), 5u);
    auto b = VertexSet::full(130);
    EXPECT_TRUE(a.is_subset_of(b));
    EXPECT_EQ((b - a).size(), 127u);
    EXPECT_EQ(a.complement(), b - a);
    EXPECT_EQ((a & b), a);
    EXPECT_EQ(a.intersection_size(b), 3u);
    EXPECT_EQ(a.to_vector(), (std::vector<Vertex>{5, 64, 129}));
}

TEST(VertexSet, MaskRoundTrip)
{
    auto s = VertexSet::from_mask(6, 0b101001);
    EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 3, 5}));
    EXPECT_TRUE(VertexSet(0).empty());
}

TEST(Graph6, ParsesKnownStrings)
{
    auto k1 = parse_graph6("@");
    EXPECT_EQ(k1.order(), 1u);
    EXPECT_EQ(k1.size(), 0u);
    EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
    auto c5 = parse_graph6("Dhc");
    EXPECT_EQ(c5, Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
}

TEST(Graph6, WritesKnownStrings)
{
    EXPECT_EQ(write_graph6(Graph(1)), "@");
    EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
}

TEST(Graph6, RejectsMalformedInput)
{
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("?"), ParseError);
    EXPECT_THROW(parse_graph6("~??"), ParseError);
    EXPECT_THROW(parse_graph6("D"), ParseError);
    EXPECT_THROW(parse_graph6("Dhc?"), ParseError);
    EXPECT_THROW(parse_graph6("D h"), ParseError);
    EXPECT_THROW(write_graph6(Graph(63)), CapacityError);
}

TEST(Graph6, StripsLineEndings) { EXPECT_EQ(parse_graph6("Dhc\r\n"), cycle_graph(5)); }

TEST(Graph6, RoundTripOnCorpus)
{
    for (const auto & g : fixtures::connected_graphs(5))
        EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    for (const auto & g : fixtures::small_families())
        EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    auto big = generate("random:62,100,3");
    EXPECT_EQ(parse_graph6(write_graph6(big)), big);
}

TEST(Families, Examples)
{
    auto c5 = generate("cycle:5");
    EXPECT_EQ(c5.order(), 5u);
    EXPECT_EQ(c5.size(), 5u);
    EXPECT_EQ(diameter(c5), 2u);

    auto star = generate("subdivided_star:3,1");
    EXPECT_EQ(star.order(), 7u);
    EXPECT_EQ(basic_counts(star).leaves, 3u);
    EXPECT_EQ(diameter(star), 4u);

    auto paths = generate("clique_paths:3,2");
    EXPECT_EQ(paths.order(), 9u);
    EXPECT_EQ(basic_counts(paths).leaves, 3u);
    EXPECT_EQ(diameter(paths), 5u);
}

TEST(Families, SharpnessShapes)
{
    for (std::size_t s = 2; s <= 4; ++s)
        for (std::size_t r = 0; r <= 3; ++r) {
            auto g = subdivided_star(s, r);
            EXPECT_EQ(g.order(), 1 + s * (r + 1));
            EXPECT_EQ(basic_counts(g).leaves, s);
            EXPECT_EQ(diameter(g), 2 * r + 2);
        }
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t t = 1; t <= 3; ++t) {
            auto g = clique_paths(n, t);
            EXPECT_EQ(g.order(), n * (t + 1));
            EXPECT_EQ(basic_counts(g).leaves, n);
            EXPECT_EQ(diameter(g), 2 * t + 1);
        }
    auto plus = cycle_plus(7);
    EXPECT_EQ(plus.order(), 8u);
    EXPECT_EQ(basic_counts(plus).leaves, 1u);
}

TEST(Families, SpecParsing)
{
    auto spec = parse_family_spec("join:complete:1+cycle:5");
    EXPECT_EQ(spec.tag, FamilyTag::join);
    EXPECT_EQ(to_string(spec), "join:complete:1+cycle:5");
    EXPECT_EQ(generate(spec), join(complete_graph(1), cycle_graph(5)));
    EXPECT_EQ(generate("random:8,400,11"), generate("random:8,400,11"));
    EXPECT_TRUE(is_connected(generate("random:8,400,11")));
}

TEST(Families, RejectsBadSpecs)
{
    for (const char * bad : {"cycle:2", "path:0", "complete:0", "star:0", "subdivided_star:1,1", "clique_paths:1,1",
                             "clique_paths:2,0", "cycle_plus:2", "random:5,0,1", "random:5,1000,1", "bogus:3",
                             "cycle", "cycle:x", "path:3,4", "join:path:2", "cycle:99999999999999999999"})
        EXPECT_THROW(parse_family_spec(bad), SpecError) << bad;
}

TEST(Distances, Examples)
{
    EXPECT_EQ(DistanceMatrix(cycle_graph(5))(0, 2), 2u);
    EXPECT_EQ(DistanceMatrix(path_graph(4))(0, 3), 3u);
    DistanceMatrix split(Graph(2));
    EXPECT_FALSE(split.finite(0, 1));
    EXPECT_FALSE(split.connected());
    EXPECT_THROW(split.diameter(), DomainError);
    EXPECT_EQ(diameter(complete_graph(4)), 1u);
    EXPECT_EQ(diameter(cycle_graph(5)), 2u);
    EXPECT_EQ(diameter(path_graph(4)), 3u);
}

TEST(Distances, MetricAxiomsOnCorpus)
{
    for (const auto & g : fixtures::connected_graphs(5)) {
        DistanceMatrix dm(g);
        const auto n = g.order();
        for (Vertex u = 0; u < n; ++u) {
            EXPECT_EQ(dm(u, u), 0u);
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_EQ(dm(u, v), dm(v, u));
                EXPECT_EQ(dm(u, v) == 1, g.adjacent(u, v));
                for (Vertex w = 0; w < n; ++w)
                    EXPECT_LE(dm(u, v), dm(u, w) + dm(w, v));
            }
        }
    }
}

TEST(Operations, Complement)
{
    EXPECT_EQ(complement(complete_graph(4)), Graph(4));
    EXPECT_TRUE(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    EXPECT_EQ(complement(cycle_graph(4)), Graph(4, {{0, 2}, {1, 3}}));
}

TEST(Operations, Join)
{
    auto fan = join(complete_graph(1), path_graph(4));
    EXPECT_EQ(fan.order(), 5u);
    EXPECT_EQ(fan.degree(0), 4u);
    EXPECT_TRUE(has_universal_vertex(fan));
    EXPECT_EQ(join(complete_graph(1), Graph(4)), star_graph(4));
    EXPECT_EQ(join(complete_graph(2), complete_graph(2)), complete_graph(4));
}

TEST(Operations, JoinWithVertexHasSmallDiameter)
{
    for (const auto & g : fixtures::small_families()) {
        auto coned = join(complete_graph(1), g);
        EXPECT_TRUE(has_universal_vertex(coned));
        EXPECT_LE(diameter(coned), 2u);
    }
}

TEST(Twins, Examples)
{
    EXPECT_EQ(true_twin_pairs(complete_graph(4)).size(), 6u);
    EXPECT_TRUE(true_twin_pairs(cycle_graph(5)).empty());
    EXPECT_TRUE(true_twin_pairs(path_graph(3)).empty());
    EXPECT_EQ(remove_true_twin_edges(complete_graph(4)), Graph(4));
    EXPECT_EQ(remove_true_twin_edges(cycle_graph(5)), cycle_graph(5));
    EXPECT_EQ(remove_true_twin_edges(complete_graph(2)), Graph(2));
}

TEST(Twins, RemovalIdempotentOnTwinFree)
{
    for (const auto & g : fixtures::connected_graphs(5)) {
        auto stripped = remove_true_twin_edges(g);
        EXPECT_EQ(stripped.order(), g.order());
        if (is_twin_free(g)) {
            EXPECT_EQ(stripped, g);
        }
    }
}

TEST(Simplicial, Examples)
{
    EXPECT_EQ(simplicial_vertices(path_graph(4)), VertexSet(4, {0, 3}));
    EXPECT_TRUE(simplicial_vertices(cycle_graph(5)).empty());
    EXPECT_EQ(simplicial_vertices(complete_graph(4)), VertexSet::full(4));
    for (std::size_t n = 4; n <= 8; ++n)
        EXPECT_TRUE(simplicial_vertices(cycle_graph(n)).empty());
}

TEST(Counts, Examples)
{
    auto check = [](const Graph & g, std::size_t n, std::size_t leaves, std::size_t delta) {
        auto c = basic_counts(g);
        EXPECT_EQ(c.order, n);
        EXPECT_EQ(c.leaves, leaves);
        EXPECT_EQ(c.max_degree, delta);
    };
    check(star_graph(3), 4, 3, 3);
    check(path_graph(2), 2, 2, 1);
    check(cycle_graph(6), 6, 0, 2);
}

TEST(Blocks, Examples)
{
    EXPECT_TRUE(is_block_graph(path_graph(5)));
    EXPECT_TRUE(is_block_graph(subdivided_star(3, 2)));
    EXPECT_FALSE(is_block_graph(cycle_graph(4)));
    EXPECT_TRUE(is_block_graph(complete_graph(4)));
    EXPECT_TRUE(is_block_graph(clique_paths(3, 2)));
    EXPECT_FALSE(is_block_graph(cycle_plus(5)));
    EXPECT_FALSE(is_block_graph(Graph(2)));
    EXPECT_TRUE(is_connected(cycle_graph(6)));
    EXPECT_FALSE(is_connected(disjoint_union(path_graph(2), path_graph(2))));
}

TEST(Subgraphs, InducedAndPruned)
{
    auto sub = induced_subgraph(cycle_graph(6), VertexSet(6, {0, 1, 2, 4}));
    EXPECT_EQ(sub.labels, (std::vector<Vertex>{0, 1, 2, 4}));
    EXPECT_EQ(sub.graph, Graph(4, {{0, 1}, {1, 2}}));
    auto pruned = prune_isolated(Graph(4, {{1, 3}}));
    EXPECT_EQ(pruned.labels, (std::vector<Vertex>{1, 3}));
    EXPECT_EQ(pruned.graph, complete_graph(2));
    EXPECT_EQ(prune_isolated(Graph(3)).graph.order(), 0u);
}

TEST(Isometry, Examples)
{
    auto c8 = cycle_graph(8);
    DistanceMatrix dm(c8);
    EXPECT_TRUE(is_isometric_subset(c8, dm, VertexSet(8, {0, 1, 2, 3})));
    EXPECT_FALSE(is_isometric_subset(c8, dm, VertexSet(8, {0, 1, 2, 3, 4, 5})));
}

TEST(Enumerate, Counts)
{
    EXPECT_EQ(enumerate_connected(1).size(), 1u);
    EXPECT_EQ(enumerate_connected(2).size(), 1u);
    EXPECT_EQ(enumerate_connected(3).size(), 4u);
    EXPECT_EQ(enumerate_connected(4).size(), 38u);
    EXPECT_EQ(enumerate_connected(5).size(), 728u);
    EXPECT_THROW(enumerate_connected(7), CapacityError);
    EXPECT_THROW(enumerate_connected(0), DomainError);
}
