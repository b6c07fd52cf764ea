#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gpos/analysis.hpp>
#include <gpos/corpus.hpp>
#include <gpos/families.hpp>
#include <gpos/isomorphism.hpp>
#include <gpos/products.hpp>
#include <gpos/verdict.hpp>

namespace gpos {

/// Subset sweeps (all X of V(G)) run up to this order.
inline constexpr std::size_t kSubsetSweepLimit = 10;
/// Lemma-on-isometric-subgraphs sweeps use every X up to this order, and the
/// maximum-set witnesses above it.
inline constexpr std::size_t kAllSubsetsLimit = 6;

using SingleCheck = void (*)(const GraphInput &, const EngineOptions &, Recorder &);
using PairCheck = void (*)(const GraphInput &, const GraphInput &, const EngineOptions &, Recorder &);

struct Statement {
    std::string id;
    std::string_view summary;
    SingleCheck single = nullptr;
    PairCheck pair = nullptr;
    /// Fixed statements always run their built-in instances.
    bool fixed = false;
    std::vector<std::string> builtin_singles;
    std::vector<std::pair<std::string, std::string>> builtin_pairs;
    /// For fixed statements: corpus family entries that also qualify.
    bool (*accepts)(const FamilySpec &) = nullptr;
    bool experimental = false;

    auto number() const -> int { return experimental ? 1000 + std::stoi(id.substr(1)) : std::stoi(id.substr(1)); }
};

namespace checks {
    inline auto guard(Recorder & rec, std::initializer_list<const char *> clauses, bool ok, const std::string & why)
        -> bool
    {
        if (! ok)
            for (auto clause : clauses)
                rec.skip(clause, why);
        return ok;
    }

    inline auto product_analysis(ProductKind kind, const Graph & g, const Graph & h, const EngineOptions & o)
        -> Analysis
    {
        return Analysis(product(kind, g, h, o.vertex_cap).graph(), o);
    }

    /// K_1 + G.
    inline auto cone(const Graph & g) -> Graph { return join(complete_graph(1), g); }

    inline auto gp_o_of(const Graph & g, const EngineOptions & o) -> std::size_t { return Analysis(g, o).gp_o(); }

    template <typename Visit>
    auto for_each_subset(std::size_t n, Visit && visit) -> void
    {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < limit; ++mask)
            visit(VertexSet::from_mask(n, mask));
    }

    inline auto pair_json(Vertex u, Vertex v) -> Json { return Json::array({u, v}); }

    // S1 -------------------------------------------------------------------
    inline auto s1(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"value", "subsets"}, a.connected(), "G is disconnected"))
            return;
        const auto & total = a.oracle_position(PositionKind::total);
        rec.compare("value", total.size, "=", a.s()).witness = to_json(total.witness);
        if (! guard(rec, {"subsets"}, a.order() <= kSubsetSweepLimit, "subset sweep limited to n <= 10"))
            return;
        std::size_t checked = 0, agreed = 0;
        Json mismatch;
        for_each_subset(a.order(), [&](const VertexSet & x) {
            ++checked;
            bool by_definition = is_total_gp(a.betweenness(), x);
            if (by_definition == x.is_subset_of(a.simplicial()))
                ++agreed;
            else if (mismatch.is_null())
                mismatch = {{"X", to_json(x)}, {"total", by_definition}};
        });
        rec.sweep("subsets", checked, agreed, mismatch);
    }

    // S2 -------------------------------------------------------------------
    inline auto s2(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"value", "pairwise"}, a.connected(), "G is disconnected"))
            return;
        const auto & outer = a.oracle_position(PositionKind::outer);
        auto & v = rec.compare("value", outer.size, "=", max_clique(a.sr().full).size);
        v.witness = to_json(outer.witness);
        if (! guard(rec, {"pairwise"}, a.order() <= kSubsetSweepLimit, "subset sweep limited to n <= 10"))
            return;
        auto mmd = mmd_relation(a.graph(), a.distances());
        std::size_t checked = 0, agreed = 0;
        Json mismatch;
        for_each_subset(a.order(), [&](const VertexSet & x) {
            if (x.size() < 2)
                return;
            ++checked;
            bool pairwise = true;
            for (auto u : x) {
                auto others = x;
                others.erase(u);
                pairwise = pairwise && others.is_subset_of(mmd[u]);
            }
            bool by_definition = is_outer_gp(a.betweenness(), x);
            if (by_definition == pairwise)
                ++agreed;
            else if (mismatch.is_null())
                mismatch = {{"X", to_json(x)}, {"outer", by_definition}, {"pairwise_mmd", pairwise}};
        });
        rec.sweep("pairwise", checked, agreed, mismatch);
    }

    // S3 -------------------------------------------------------------------
    inline auto s3(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"iff"}, a.connected(), "G is disconnected") ||
            ! guard(rec, {"iff"}, a.order() <= kSubsetSweepLimit, "subset sweep limited to n <= 10"))
            return;
        const auto & bt = a.betweenness();
        std::size_t checked = 0, agreed = 0;
        Json mismatch;
        for_each_subset(a.order(), [&](const VertexSet & x) {
            ++checked;
            bool dual = is_dual_gp(bt, x);
            bool characterized = is_general_position(bt, x) && is_convex(bt, x.complement());
            if (dual == characterized)
                ++agreed;
            else if (mismatch.is_null())
                mismatch = {{"X", to_json(x)}, {"dual", dual}, {"gp_and_convex_complement", characterized}};
        });
        rec.sweep("iff", checked, agreed, mismatch);
    }

    // S4 -------------------------------------------------------------------
    inline auto s4(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"value"}, a.connected(), "G is disconnected") ||
            ! guard(rec, {"value"}, a.b() > 0, "boundary is empty"))
            return;
        const auto & outer = a.position(PositionKind::outer);
        rec.compare("value", outer.size, "=", max_clique(a.sr().pruned.graph).size).witness = to_json(outer.witness);
    }

    // S5 -------------------------------------------------------------------
    inline constexpr PositionKind kAllKinds[] = {PositionKind::general, PositionKind::outer, PositionKind::dual,
                                                 PositionKind::total};

    inline auto clause_name(PositionKind kind) -> const char *
    {
        switch (kind) {
        case PositionKind::general:
            return "gp";
        case PositionKind::outer:
            return "outer";
        case PositionKind::dual:
            return "dual";
        case PositionKind::total:
            return "total";
        }
        return "?";
    }

    /// One shortest path per vertex pair (lowest-label predecessor).
    inline auto geodesic_paths(const DistanceMatrix & dm) -> std::vector<VertexSet>
    {
        const auto n = dm.order();
        std::vector<VertexSet> result;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                VertexSet path(n);
                path.insert(v);
                for (Vertex at = v; at != u;) {
                    Vertex next = 0;
                    while (! (dm(u, next) + 1 == dm(u, at) && dm(next, at) == 1))
                        ++next;
                    path.insert(next);
                    at = next;
                }
                result.push_back(std::move(path));
            }
        return result;
    }

    inline auto isometric_subsets(Analysis & a) -> std::vector<VertexSet>
    {
        if (a.order() > kSubsetSweepLimit)
            return geodesic_paths(a.distances());
        std::vector<VertexSet> result;
        for_each_subset(a.order(), [&](const VertexSet & sub) {
            if (sub.size() >= 2 && is_isometric_subset(a.graph(), a.distances(), sub))
                result.push_back(sub);
        });
        return result;
    }

    inline auto relabel(const std::vector<Vertex> & labels, const VertexSet & x) -> VertexSet
    {
        VertexSet result(labels.size());
        for (Vertex i = 0; i < labels.size(); ++i)
            if (x.contains(labels[i]))
                result.insert(i);
        return result;
    }

    inline auto check_isometric(Analysis & a, const std::vector<VertexSet> & subs, const std::vector<VertexSet> & xs,
                                Recorder & rec) -> void
    {
        struct Sub {
            VertexSet members;
            std::vector<Vertex> labels;
            Betweenness bt;
        };
        std::vector<Sub> prepared;
        for (const auto & sub : subs) {
            auto induced = induced_subgraph(a.graph(), sub);
            prepared.push_back({sub, induced.labels, Betweenness(induced.graph)});
        }
        for (auto kind : kAllKinds) {
            std::size_t checked = 0, agreed = 0;
            Json mismatch;
            for (const auto & x : xs) {
                if (! satisfies(a.betweenness(), kind, x))
                    continue;
                for (const auto & sub : prepared) {
                    ++checked;
                    auto restricted = relabel(sub.labels, x);
                    if (satisfies(sub.bt, kind, restricted))
                        ++agreed;
                    else if (mismatch.is_null())
                        mismatch = {{"X", to_json(x)}, {"subgraph", to_json(sub.members)}};
                }
            }
            rec.sweep(clause_name(kind), checked, agreed, mismatch).values = {{"subgraphs", prepared.size()},
                                                                               {"sets", xs.size()}};
        }
    }

    inline auto witness_sets(Analysis & a) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> xs;
        for (auto kind : kAllKinds)
            xs.push_back(a.position(kind).witness);
        return xs;
    }

    inline auto s5_single(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"gp", "outer", "dual", "total"}, a.connected(), "G is disconnected"))
            return;
        std::vector<VertexSet> xs;
        if (a.order() <= kAllSubsetsLimit)
            for_each_subset(a.order(), [&](const VertexSet & x) { xs.push_back(x); });
        else
            xs = witness_sets(a);
        check_isometric(a, isometric_subsets(a), xs, rec);
    }

    inline auto s5_pair(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! guard(rec, {"gp", "outer", "dual", "total"}, is_connected(g.graph) && is_connected(h.graph),
                    "factors must be connected"))
            return;
        auto p = strong_product(g.graph, h.graph, o.vertex_cap);
        Analysis a(p.graph(), o);
        std::vector<VertexSet> layers;
        for (Vertex y = 0; y < h.graph.order(); ++y)
            layers.push_back(layer(p, Factor::left, y));
        for (Vertex x = 0; x < g.graph.order(); ++x)
            layers.push_back(layer(p, Factor::right, x));
        check_isometric(a, layers, witness_sets(a), rec);
    }

    // S6 -------------------------------------------------------------------
    inline auto s6(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"alpha_form", "twin_free"}, a.connected(), "G is disconnected") ||
            ! guard(rec, {"alpha_form", "twin_free"}, a.diameter() == 2, "diam(G) != 2"))
            return;
        auto stripped = remove_true_twin_edges(a.graph());
        auto alpha_stripped = independence_number(stripped).size;
        auto omega_stripped = max_clique(stripped).size;
        auto & v = rec.compare("alpha_form", a.gp_o(), "=", alpha_stripped);
        v.values = {{"omega_form", omega_stripped}, {"omega_form_agrees", omega_stripped == a.gp_o()}};
        if (guard(rec, {"twin_free"}, a.twin_free(), "G has true twins"))
            rec.compare("twin_free", a.gp_o(), "=", a.alpha().size);
    }

    // S7 -------------------------------------------------------------------
    inline auto s7(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"bound"}, a.connected(), "G is disconnected") ||
            ! guard(rec, {"bound"}, a.diameter() >= 2, "diam(G) < 2"))
            return;
        auto k = a.diameter();
        auto independent = a.alpha_k(k - 1);
        auto & v = rec.compare("bound", a.gp_o(), ">=", independent.size);
        v.witness = to_json(independent.witness);
        v.values = {{"k", k}};
    }

    // S8 -------------------------------------------------------------------
    inline auto accepts_s8(const FamilySpec & spec) -> bool
    {
        return spec.tag == FamilyTag::subdivided_star || spec.tag == FamilyTag::clique_paths;
    }

    inline auto s8(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! guard(rec, {"diam", "n_1", "gp_o", "alpha"}, in.family && accepts_s8(*in.family),
                    "instance is not family:subdivided_star or family:clique_paths"))
            return;
        const auto & p = in.family->params;
        const bool star = in.family->tag == FamilyTag::subdivided_star;
        const auto expected_diam = star ? 2 * p[1] + 2 : 2 * p[1] + 1;
        const auto expected_leaves = p[0];
        Analysis a(in.graph, o);
        auto n_1 = basic_counts(a.graph()).leaves;
        rec.compare("diam", a.diameter(), "=", expected_diam);
        rec.compare("n_1", n_1, "=", expected_leaves);
        rec.compare("gp_o", a.gp_o(), "=", n_1).witness = to_json(a.position(PositionKind::outer).witness);
        auto k = a.diameter();
        auto independent = a.alpha_k(k - 1);
        auto & v = rec.compare("alpha", independent.size, "=", n_1);
        v.witness = to_json(independent.witness);
        v.values = {{"k", k}};
    }

    // S9, S10 --------------------------------------------------------------
    inline auto s9(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        auto p = strong_product(g.graph, h.graph, o.vertex_cap);
        auto expected = cartesian_set(p, simplicial_vertices(g.graph), simplicial_vertices(h.graph));
        rec.compare("sets", to_json(simplicial_vertices(p.graph())), "=", to_json(expected));
    }

    inline auto s10(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! guard(rec, {"value"}, is_connected(g.graph) && is_connected(h.graph), "factors must be connected"))
            return;
        auto a = product_analysis(ProductKind::strong, g.graph, h.graph, o);
        rec.compare("value", a.gp_t(), "=", simplicial_vertices(g.graph).size() * simplicial_vertices(h.graph).size());
    }

    // S11 ------------------------------------------------------------------
    inline auto s11(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! guard(rec, {"cases"}, is_connected(g.graph) && is_connected(h.graph), "factors must be connected"))
            return;
        MmdFactor left(g.graph), right(h.graph);
        auto p = strong_product(g.graph, h.graph, o.vertex_cap);
        DistanceMatrix dm(p.graph());
        auto direct = mmd_relation(p.graph(), dm);
        std::size_t checked = 0, agreed = 0, mmd_pairs = 0;
        Json mismatch;
        for (Vertex u = 0; u < p.graph().order(); ++u)
            for (Vertex v = u + 1; v < p.graph().order(); ++v) {
                ++checked;
                auto c = check_mmd_product_cases(left, right, p.decode(u), p.decode(v));
                bool is_mmd = direct[u].contains(v);
                mmd_pairs += is_mmd;
                if (is_mmd == (c != MmdCase::none))
                    ++agreed;
                else if (mismatch.is_null())
                    mismatch = {{"pair", pair_json(u, v)}, {"direct_mmd", is_mmd}, {"case", to_string(c)}};
            }
        rec.sweep("cases", checked, agreed, mismatch).values = {{"mmd_pairs", mmd_pairs}};
    }

    // S12, S13, S14 --------------------------------------------------------
    inline auto s12(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis ag(g.graph, o), ah(h.graph, o);
        if (! guard(rec, {"lower", "upper"}, ag.connected() && ah.connected(), "factors must be connected") ||
            ! guard(rec, {"lower", "upper"}, ag.order() >= 2 && ah.order() >= 2, "factors need order >= 2"))
            return;
        auto p = product_analysis(ProductKind::strong, g.graph, h.graph, o);
        const auto & outer = p.position(PositionKind::outer);
        rec.compare("lower", ag.gp_o() * ah.gp_o(), "<=", outer.size).witness = to_json(outer.witness);
        rec.compare("upper", outer.size, "<=", ag.b() * ah.b());
    }

    inline auto s13(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis ag(g.graph, o), ah(h.graph, o);
        if (! guard(rec, {"coincide", "value"}, ag.connected() && ah.connected(), "factors must be connected") ||
            ! guard(rec, {"coincide", "value"}, ag.order() >= 2 && ah.order() >= 2, "factors need order >= 2") ||
            ! guard(rec, {"coincide", "value"}, is_block_graph(g.graph) && is_block_graph(h.graph),
                    "factors must be block graphs"))
            return;
        rec.compare("coincide", ag.gp_o() * ah.gp_o(), "=", ag.b() * ah.b());
        auto p = product_analysis(ProductKind::strong, g.graph, h.graph, o);
        rec.compare("value", p.gp_o(), "=", ag.b() * ah.b());
    }

    inline auto s14(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis ag(g.graph, o), ah(h.graph, o);
        auto p = product_analysis(ProductKind::strong, g.graph, h.graph, o);
        Json bounds = {{"lower", ag.gp_o() * ah.gp_o()}, {"upper", ag.b() * ah.b()}};
        auto clique = max_clique(p.sr().full);
        const auto & oracle = p.oracle_position(PositionKind::outer);
        auto & v = rec.compare("value", clique.size, "=", 5);
        v.witness = to_json(clique.witness);
        bounds["oracle_outer"] = oracle.size;
        v.values = bounds;
        if (oracle.size != clique.size) {
            v.outcome = Outcome::fails;
            v.note = "oracle outer search gives " + std::to_string(oracle.size);
        }
    }

    // S15 ------------------------------------------------------------------
    inline auto s15(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"k=2"}, a.connected(), "G is disconnected") ||
            ! guard(rec, {"k=2"}, a.order() >= 2 && a.diameter() == 2, "diam(G) != 2") ||
            ! guard(rec, {"k=2"}, a.twin_free(), "G has true twins"))
            return;
        auto p = product_analysis(ProductKind::strong, a.graph(), a.graph(), o);
        auto & v = rec.compare("k=2", p.gp_o(), "=", p.alpha().size);
        v.witness = to_json(p.alpha().witness);
        v.values = {{"product_order", p.order()}, {"product_diam", p.diameter()}, {"product_twin_free", p.twin_free()}};
    }

    // S16, S17, S18 --------------------------------------------------------
    inline auto odd_cycle_plus_k(const GraphInput & in) -> std::size_t
    {
        if (! in.family || in.family->tag != FamilyTag::cycle_plus)
            return 0;
        auto n = in.family->params[0];
        return n % 2 == 1 && n >= 5 ? (n - 1) / 2 : 0;
    }

    inline auto s16(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis ag(g.graph, o), ah(h.graph, o);
        if (! guard(rec, {"lower", "upper", "incomparability"}, ag.connected() && ah.connected(),
                    "factors must be connected"))
            return;
        auto p = product_analysis(ProductKind::strong, g.graph, h.graph, o);
        const auto & dual = p.position(PositionKind::dual);
        const auto sg = ag.s(), sh = ah.s(), ng = ag.order(), nh = ah.order();
        rec.compare("lower", sg * sh, "<=", dual.size).witness = to_json(dual.witness);
        const std::size_t terms[] = {sg * nh + sh * ng - sg * sh, ng * ah.gp_d(), nh * ag.gp_d()};
        auto & upper = rec.compare("upper", dual.size, "<=", *std::min_element(std::begin(terms), std::end(terms)));
        upper.values = {{"terms", terms}};
        auto k = odd_cycle_plus_k(g), l = odd_cycle_plus_k(h);
        if (! guard(rec, {"incomparability"}, k >= 2 && l >= 2, "factors are not C_{2k+1}^+ with k >= 2"))
            return;
        Json formula = {2 * l + 2 * k + 3, 6 * k + 6, 6 * l + 6};
        rec.compare("incomparability", terms, "=", formula).values = {{"k", k}, {"l", l}};
    }

    inline auto accepts_s17(const FamilySpec & spec) -> bool { return spec.tag == FamilyTag::cycle_plus; }

    inline auto s17(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        auto k = odd_cycle_plus_k(in);
        if (! guard(rec, {"value"}, k >= 2, "instance is not family:cycle_plus with odd n >= 5"))
            return;
        Analysis a(in.graph, o);
        const auto & dual = a.position(PositionKind::dual);
        auto & v = rec.compare("value", dual.size, "=", 3);
        v.witness = to_json(dual.witness);
        v.values = {{"k", k}};
    }

    inline auto s18(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"n=2", "n=3"}, a.connected(), "H is disconnected"))
            return;
        for (std::size_t n : {2, 3}) {
            auto p = product_analysis(ProductKind::strong, complete_graph(n), a.graph(), o);
            const auto & dual = p.position(PositionKind::dual);
            rec.compare("n=" + std::to_string(n), dual.size, "=", n * a.gp_d()).witness = to_json(dual.witness);
        }
    }

    // S19, S20 -------------------------------------------------------------
    inline auto lex_guard(Recorder & rec, std::initializer_list<const char *> clauses, const Graph & g,
                          const Graph & h) -> bool
    {
        return guard(rec, clauses, is_connected(g) && is_connected(h), "factors must be connected") &&
               guard(rec, clauses, g.order() >= 2 && h.order() >= 2, "factors need order >= 2");
    }

    inline auto s19(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! lex_guard(rec, {"sets"}, g.graph, h.graph))
            return;
        auto p = lexicographic_product(g.graph, h.graph, o.vertex_cap);
        VertexSet expected(p.graph().order());
        if (is_complete(h.graph))
            expected = cartesian_set(p, simplicial_vertices(g.graph), h.graph.vertices());
        rec.compare("sets", to_json(simplicial_vertices(p.graph())), "=", to_json(expected)).values = {
            {"h_complete", is_complete(h.graph)}};
    }

    inline auto s20(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! lex_guard(rec, {"value"}, g.graph, h.graph))
            return;
        auto p = product_analysis(ProductKind::lexicographic, g.graph, h.graph, o);
        auto expected = is_complete(h.graph) ? simplicial_vertices(g.graph).size() * h.graph.order() : 0;
        rec.compare("value", p.gp_t(), "=", expected).values = {{"h_complete", is_complete(h.graph)}};
    }

    // S21 ------------------------------------------------------------------
    inline auto s21(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"i", "ii", "iii"}, a.connected(), "G is disconnected") ||
            ! guard(rec, {"i", "ii", "iii"}, a.order() >= 2, "G needs order >= 2"))
            return;
        auto bar = g2bar(a.graph(), a.distances());
        auto omega_bar = max_clique(bar).size;
        if (guard(rec, {"i"}, ! has_universal_vertex(a.graph()), "G has a universal vertex")) {
            Analysis coned(cone(a.graph()), o);
            rec.compare("i", omega_bar, "=", max_clique(coned.sr().pruned.graph).size);
        }
        if (guard(rec, {"ii"}, a.diameter() <= 2, "diam(G) > 2")) {
            auto pruned = prune_isolated(bar);
            if (guard(rec, {"ii"}, pruned.graph.order() > 0, "G_2bar' is empty"))
                rec.compare("ii", max_clique(pruned.graph).size, "=", max_clique(a.sr().pruned.graph).size);
        }
        if (guard(rec, {"iii"}, a.twin_free(), "G has true twins"))
            rec.compare("iii", omega_bar, "=", a.alpha().size);
    }

    // S22 ------------------------------------------------------------------
    inline auto compare_sr(Recorder & rec, const char * clause, const Graph & lhs, const Graph & rhs) -> void
    {
        auto lp = prune_isolated(lhs), rp = prune_isolated(rhs);
        std::string iso;
        if (lhs == rhs)
            iso = "identity";
        else if (lp.graph.order() <= kIsomorphismMaxOrder && rp.graph.order() <= kIsomorphismMaxOrder)
            iso = are_isomorphic(lp.graph, rp.graph) ? "search" : "not_isomorphic";
        else
            iso = "omega_only";
        auto & v = rec.compare(clause, max_clique(lp.graph).size, "=", max_clique(rp.graph).size);
        v.values = {{"isomorphism", iso}, {"order_lhs", lp.graph.order()}, {"order_rhs", rp.graph.order()}};
        if (iso == "not_isomorphic") {
            v.outcome = Outcome::fails;
            v.note = "sides are not isomorphic";
        }
        else if (iso == "omega_only")
            v.note = "isomorphism not checked above 12 vertices; clique numbers compared";
    }

    inline auto s22(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! lex_guard(rec, {"i", "ii", "iii", "iv"}, g.graph, h.graph))
            return;
        Analysis ag(g.graph, o), ah(h.graph, o);
        auto lex = [&](const Graph & a, const Graph & b) { return lexicographic_product(a, b, o.vertex_cap).graph(); };
        auto p = product_analysis(ProductKind::lexicographic, g.graph, h.graph, o);
        const auto & lhs = p.sr().full;
        const bool h_complete = is_complete(h.graph), g_complete = is_complete(g.graph);
        const bool h_universal = has_universal_vertex(h.graph);
        auto h_bar = [&] { return g2bar(h.graph, ah.distances()); };

        if (guard(rec, {"i"}, ag.twin_free(), "G has true twins") &&
            guard(rec, {"i"}, ! h_complete, "H is complete"))
            compare_sr(rec, "i", lhs, lex(ag.sr().full, h_bar()));
        if (guard(rec, {"ii"}, h_complete, "H is not complete"))
            compare_sr(rec, "ii", lhs, lex(ag.sr().full, h.graph));
        if (guard(rec, {"iii"}, g_complete, "G is not complete") &&
            guard(rec, {"iii"}, ! h_universal, "H has a universal vertex"))
            compare_sr(rec, "iii", lhs, lex(empty_graph(g.graph.order()), h_bar()));
        if (guard(rec, {"iv"}, ! g_complete, "G is complete") &&
            guard(rec, {"iv"}, ! h_universal, "H has a universal vertex"))
            compare_sr(rec, "iv", lhs, lex(tf_boundary_and_srs(g.graph, ag.distances()).full, h_bar()));
    }

    // S23 - S26 ------------------------------------------------------------
    inline auto s23(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! lex_guard(rec, {"i", "ii", "iii"}, g.graph, h.graph))
            return;
        Analysis ag(g.graph, o), ah(h.graph, o);
        if (! guard(rec, {"i", "ii", "iii"}, ag.twin_free(), "G has true twins") ||
            ! guard(rec, {"i", "ii", "iii"}, ! is_complete(h.graph), "H is complete"))
            return;
        auto p = product_analysis(ProductKind::lexicographic, g.graph, h.graph, o);
        if (guard(rec, {"i"}, ! has_universal_vertex(h.graph), "H has a universal vertex"))
            rec.compare("i", p.gp_o(), "=", ag.gp_o() * gp_o_of(cone(h.graph), o));
        if (guard(rec, {"ii"}, ah.diameter() == 2, "diam(H) != 2"))
            rec.compare("ii", p.gp_o(), "=", ag.gp_o() * ah.gp_o());
        if (guard(rec, {"iii"}, ah.twin_free(), "H has true twins"))
            rec.compare("iii", p.gp_o(), "=", ag.gp_o() * ah.alpha().size);
    }

    inline auto s24(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"m=2", "m=3"}, a.connected(), "G is disconnected") ||
            ! guard(rec, {"m=2", "m=3"}, a.order() >= 2, "G needs order >= 2"))
            return;
        for (std::size_t m : {2, 3}) {
            auto p = product_analysis(ProductKind::lexicographic, a.graph(), complete_graph(m), o);
            rec.compare("m=" + std::to_string(m), p.gp_o(), "=", m * a.gp_o());
        }
    }

    inline auto s25(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        const auto all = {"i,m=2", "i,m=3", "ii,m=2", "ii,m=3"};
        if (! guard(rec, all, a.connected(), "H is disconnected") ||
            ! guard(rec, all, a.order() >= 2, "H needs order >= 2") ||
            ! guard(rec, all, ! has_universal_vertex(a.graph()), "H has a universal vertex"))
            return;
        const bool diam2 = a.diameter() == 2;
        for (std::size_t m : {2, 3}) {
            auto suffix = ",m=" + std::to_string(m);
            auto p = product_analysis(ProductKind::lexicographic, complete_graph(m), a.graph(), o);
            if (diam2) {
                rec.compare("i" + suffix, p.gp_o(), "=", a.gp_o());
                rec.skip("ii" + suffix, "diam(H) = 2");
            }
            else {
                rec.skip("i" + suffix, "diam(H) != 2");
                rec.compare("ii" + suffix, p.gp_o(), "=", gp_o_of(cone(a.graph()), o));
            }
        }
    }

    inline auto s26(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! lex_guard(rec, {"i", "ii"}, g.graph, h.graph))
            return;
        Analysis ag(g.graph, o), ah(h.graph, o);
        if (! guard(rec, {"i", "ii"}, ! is_complete(g.graph), "G is complete") ||
            ! guard(rec, {"i", "ii"}, ! has_universal_vertex(h.graph), "H has a universal vertex"))
            return;
        auto srs = tf_boundary_and_srs(g.graph, ag.distances());
        auto omega_srs = max_clique(srs.srs.graph).size;
        auto p = product_analysis(ProductKind::lexicographic, g.graph, h.graph, o);
        if (ah.diameter() == 2) {
            rec.compare("i", p.gp_o(), "=", omega_srs * ah.gp_o());
            rec.skip("ii", "diam(H) = 2");
        }
        else {
            rec.skip("i", "diam(H) != 2");
            rec.compare("ii", p.gp_o(), "=", omega_srs * gp_o_of(cone(h.graph), o));
        }
    }

    // S27 ------------------------------------------------------------------
    inline auto s27_pair(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        if (! guard(rec, {"i"}, is_connected(g.graph), "G is disconnected") ||
            ! guard(rec, {"i"}, simplicial_vertices(g.graph).empty(), "G has a simplicial vertex") ||
            ! guard(rec, {"i"}, simplicial_vertices(h.graph).empty(), "H has a simplicial vertex"))
            return;
        auto p = product_analysis(ProductKind::lexicographic, g.graph, h.graph, o);
        const auto & dual = p.position(PositionKind::dual);
        rec.compare("i", dual.size, "=", 0).witness = to_json(dual.witness);
    }

    inline auto s27_single(const GraphInput & in, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis a(in.graph, o);
        if (! guard(rec, {"ii,n=1", "ii,n=2", "ii,n=3"}, a.connected(), "G is disconnected"))
            return;
        for (std::size_t n : {1, 2, 3}) {
            auto p = product_analysis(ProductKind::lexicographic, a.graph(), complete_graph(n), o);
            const auto & dual = p.position(PositionKind::dual);
            rec.compare("ii,n=" + std::to_string(n), dual.size, "=", n * a.gp_d()).witness = to_json(dual.witness);
        }
    }

    // Experimental: gp(G x H) = gp(G) gp(H) for the strong product.
    inline auto x1(const GraphInput & g, const GraphInput & h, const EngineOptions & o, Recorder & rec) -> void
    {
        Analysis ag(g.graph, o), ah(h.graph, o);
        if (! guard(rec, {"value"}, ag.connected() && ah.connected(), "factors must be connected"))
            return;
        auto p = product_analysis(ProductKind::strong, g.graph, h.graph, o);
        const auto & gp = p.position(PositionKind::general);
        rec.compare("value", gp.size, "=", ag.gp() * ah.gp()).witness = to_json(gp.witness);
    }
} // namespace checks

inline auto default_singles() -> std::vector<std::string>
{
    return {"family:path:4",          "family:cycle:5",         "family:cycle:6",
            "family:complete:4",      "family:star:3",          "family:cycle_plus:5",
            "family:subdivided_star:3,1", "family:clique_paths:3,1", "family:join:complete:1+cycle:5"};
}

inline auto default_pairs() -> std::vector<std::pair<std::string, std::string>>
{
    const char * base[] = {"family:path:3", "family:cycle:4", "family:cycle:5", "family:complete:3", "family:star:3"};
    std::vector<std::pair<std::string, std::string>> result;
    for (auto g : base)
        for (auto h : base)
            result.emplace_back(g, h);
    return result;
}

/// Partners paired with each graph of a single-graph corpus (in both orders)
/// to feed the product statements.
inline auto partner_graphs() -> std::vector<std::string>
{
    return {"family:complete:2", "family:path:3", "family:complete:3", "family:cycle:4"};
}

namespace detail {
    inline auto statement(std::string id, std::string_view summary, SingleCheck single, PairCheck pair = nullptr)
        -> Statement
    {
        Statement s;
        s.id = std::move(id);
        s.summary = summary;
        s.single = single;
        s.pair = pair;
        return s;
    }

    inline auto fixed_statement(Statement s, std::vector<std::string> singles,
                                std::vector<std::pair<std::string, std::string>> pairs,
                                bool (*accepts)(const FamilySpec &)) -> Statement
    {
        s.fixed = true;
        s.builtin_singles = std::move(singles);
        s.builtin_pairs = std::move(pairs);
        s.accepts = accepts;
        return s;
    }
} // namespace detail

inline auto catalog() -> const std::vector<Statement> &
{
    static const std::vector<Statement> statements = [] {
        using namespace checks;
        std::vector<Statement> s;
        s.push_back(detail::statement("S1", "gp_t(G) = s(G); X total iff X within S(G)", s1));
        s.push_back(detail::statement("S2", "gp_o(G) = omega(G_SR); outer iff pairwise MMD", s2));
        s.push_back(detail::statement("S3", "X dual iff X gp and V(G) - X convex", s3));
        s.push_back(detail::statement("S4", "gp_o(G) = omega(G_SR')", s4));
        s.push_back(detail::statement("S5", "isometric subgraphs inherit (dual, outer, total) gp sets", s5_single, s5_pair));
        s.push_back(detail::statement("S6", "diam 2: gp_o(G) = alpha(G_tt^-); twin-free: = alpha(G)", s6));
        s.push_back(detail::statement("S7", "diam k >= 2: gp_o(G) >= alpha_{k-1}(G)", s7));
        s.push_back(detail::fixed_statement(
            detail::statement("S8", "sharpness: gp_o = n_1 = alpha_{k-1} on K_{1,s}^r and K_n^t", s8),
            {"family:subdivided_star:2,1", "family:subdivided_star:3,1", "family:subdivided_star:3,2",
             "family:clique_paths:2,1", "family:clique_paths:3,1", "family:clique_paths:3,2"},
            {}, accepts_s8));
        s.push_back(detail::statement("S9", "S(G x H) = S(G) x S(H) (strong)", nullptr, s9));
        s.push_back(detail::statement("S10", "gp_t(G x H) = s(G) s(H) (strong)", nullptr, s10));
        s.push_back(detail::statement("S11", "MMD in the strong product iff one of five factor cases", nullptr, s11));
        s.push_back(detail::statement("S12", "gp_o(G) gp_o(H) <= gp_o(G x H) <= b(G) b(H)", nullptr, s12));
        s.push_back(detail::statement("S13", "block graphs: strong outer bounds coincide", nullptr, s13));
        s.push_back(detail::fixed_statement(detail::statement("S14", "gp_o(C5 x C5) = 5", nullptr, s14), {},
                                            {{"family:cycle:5", "family:cycle:5"}}, nullptr));
        s.push_back(detail::statement("S15", "twin-free diam 2: gp_o(G x G) = alpha(G x G)", s15));
        {
            auto st = detail::statement("S16", "s(G)s(H) <= gp_d(G x H) <= min of three terms", nullptr, s16);
            st.builtin_pairs = default_pairs();
            st.builtin_pairs.emplace_back("family:cycle_plus:5", "family:cycle_plus:5");
            s.push_back(std::move(st));
        }
        s.push_back(detail::fixed_statement(detail::statement("S17", "gp_d(C_{2k+1}^+) = 3", s17),
                                            {"family:cycle_plus:5", "family:cycle_plus:7"}, {}, accepts_s17));
        s.push_back(detail::statement("S18", "gp_d(K_n x H) = n gp_d(H)", s18));
        s.push_back(detail::statement("S19", "S(G o H) = S(G) x V(H) if H complete, else empty", nullptr, s19));
        s.push_back(detail::statement("S20", "gp_t(G o H) = s(G) n(H) if H complete, else 0", nullptr, s20));
        s.push_back(detail::statement("S21", "clique numbers of G_2bar", s21));
        s.push_back(detail::statement("S22", "strong resolving graph of G o H", nullptr, s22));
        s.push_back(detail::statement("S23", "twin-free G, non-complete H: gp_o(G o H)", nullptr, s23));
        s.push_back(detail::statement("S24", "gp_o(G o K_m) = m gp_o(G)", s24));
        s.push_back(detail::statement("S25", "gp_o(K_m o H)", s25));
        s.push_back(detail::statement("S26", "gp_o(G o H) = omega(SRS(G)) times a factor of H", nullptr, s26));
        {
            auto st = detail::statement("S27", "gp_d(G o H) = 0 without simplicial vertices; gp_d(G o K_n) = n gp_d(G)", s27_single, s27_pair);
            for (auto g : {"family:cycle:4", "family:cycle:5"})
                for (auto h : {"family:cycle:4", "family:cycle:5"})
                    st.builtin_pairs.emplace_back(g, h);
            s.push_back(std::move(st));
        }
        return s;
    }();
    return statements;
}

inline auto experimental_gp_strong() -> const Statement &
{
    static const Statement statement = [] {
        auto s = detail::statement("X1", "experimental: gp(G x H) = gp(G) gp(H) (strong)", nullptr, checks::x1);
        s.experimental = true;
        return s;
    }();
    return statement;
}

inline auto find_statement(std::string_view id) -> const Statement &
{
    for (const auto & s : catalog())
        if (s.id == id)
            return s;
    throw SpecError("unknown statement '" + std::string(id) + "'");
}

} // namespace gpos
