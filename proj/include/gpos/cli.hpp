#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gpos/invariants.hpp>
#include <gpos/suite.hpp>

namespace gpos {

inline auto to_json(const InvariantBundle & bundle, const Graph & g, bool witnesses) -> Json
{
    Json out;
    out["n"] = bundle.n;
    out["n_1"] = bundle.n_1;
    out["max_degree"] = bundle.max_degree;
    out["connected"] = bundle.connected;
    if (g.order() >= 1 && g.order() <= kGraph6MaxOrder)
        out["graph6"] = write_graph6(g);
    if (! bundle.metric)
        return out;
    const auto & m = *bundle.metric;
    out["diam"] = m.diam;
    out["s"] = m.simplicial.size();
    out["b"] = m.boundary.b();
    out["omega"] = m.omega.size;
    out["alpha"] = m.alpha.size;
    auto alpha_k = Json::array();
    for (const auto & a : m.alpha_k)
        alpha_k.push_back(a.size);
    out["alpha_k"] = alpha_k;
    out["gp"] = m.gp.size;
    out["gp_t"] = m.gp_t.size;
    out["gp_o"] = m.gp_o.size;
    out["gp_d"] = m.gp_d.size;
    if (witnesses) {
        Json w;
        w["simplicial"] = to_json(m.simplicial);
        w["boundary"] = to_json(m.boundary.boundary);
        w["omega"] = to_json(m.omega.witness);
        w["alpha"] = to_json(m.alpha.witness);
        w["gp"] = to_json(m.gp.witness);
        w["gp_t"] = to_json(m.gp_t.witness);
        w["gp_o"] = to_json(m.gp_o.witness);
        w["gp_d"] = to_json(m.gp_d.witness);
        out["witnesses"] = w;
    }
    return out;
}

/// Vertex cap for products, from GP_VERTEX_CAP when set.
inline auto vertex_cap_from_environment() -> std::size_t
{
    const char * text = std::getenv("GP_VERTEX_CAP");
    if (text == nullptr || *text == '\0')
        return kDefaultVertexCap;
    auto cap = detail::parse_unsigned(text);
    if (cap == 0)
        throw SpecError("GP_VERTEX_CAP must be positive");
    return cap;
}

/// Runs the command line; returns the process exit status
/// (0 success, 1 a statement failed, 2 usage or input error).
inline auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"general position invariants of graphs and graph products", "gpos"};
    app.require_subcommand(1);

    std::string input;
    bool witnesses = false, oracle = false, allow_disconnected = false;
    auto * invariants = app.add_subcommand("invariants", "invariant bundle of one graph (graph6 or family:<spec>)");
    invariants->add_option("input", input, "graph6 line or family:<spec>")->required();
    invariants->add_flag("--witnesses", witnesses, "include witness sets");
    invariants->add_flag("--oracle", oracle, "use the definition-level engine");
    invariants->add_flag("--allow-disconnected", allow_disconnected, "report structure fields for disconnected input");

    std::string op, g_input, h_input;
    bool with_invariants = false;
    auto * product_cmd = app.add_subcommand("product", "strong or lexicographic product as graph6");
    product_cmd->add_option("op", op, "strong or lex")->required()->check(CLI::IsMember({"strong", "lex"}));
    product_cmd->add_option("G", g_input, "left factor")->required();
    product_cmd->add_option("H", h_input, "right factor")->required();
    product_cmd->add_flag("--invariants", with_invariants, "append the invariant bundle of the product");
    product_cmd->add_flag("--oracle", oracle, "use the definition-level engine for --invariants");

    std::string statements = "all", corpus_spec;
    unsigned jobs = 1;
    bool no_cross_check = false, experimental = false;
    auto * verify = app.add_subcommand("verify", "check catalog statements, JSON lines on stdout");
    verify->add_option("--statements", statements, "comma separated ids or 'all'");
    verify->add_option("--corpus", corpus_spec, "exhaustive:n | file:<path> | family:<spec>[,...] | pairs:AxB");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    verify->add_flag("--oracle", oracle, "use the definition-level engine throughout");
    verify->add_flag("--no-cross-check", no_cross_check, "skip oracle cross-checks on small graphs");
    verify->add_flag("--experimental-gp-strong", experimental, "also test gp(G x H) = gp(G) gp(H)");

    std::string listing;
    auto * corpus_cmd = app.add_subcommand("corpus", "print a corpus as graph6 lines");
    corpus_cmd->add_option("spec", listing, "corpus spec")->required();

    auto * list_cmd = app.add_subcommand("statements", "list the statement catalog");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto engine = oracle ? Engine::oracle : Engine::characterization;
        if (invariants->parsed()) {
            auto g = parse_graph_input(input).graph;
            auto bundle = compute_invariants(g, {engine, allow_disconnected});
            out << to_json(bundle, g, witnesses).dump() << '\n';
        }
        else if (product_cmd->parsed()) {
            auto g = parse_graph_input(g_input).graph;
            auto h = parse_graph_input(h_input).graph;
            auto kind = op == "strong" ? ProductKind::strong : ProductKind::lexicographic;
            auto p = product(kind, g, h, vertex_cap_from_environment());
            if (p.graph().order() > kGraph6MaxOrder)
                throw CapacityError("product: order " + std::to_string(p.graph().order()) +
                                    " exceeds the graph6 limit of " + std::to_string(kGraph6MaxOrder));
            out << write_graph6(p.graph()) << '\n';
            Json note = {{"product", op}, {"codec", "(g,h) -> g*n_H + h"}, {"n_G", g.order()}, {"n_H", h.order()}};
            out << note.dump() << '\n';
            if (with_invariants)
                out << to_json(compute_invariants(p.graph(), {engine, false}), p.graph(), false).dump() << '\n';
        }
        else if (verify->parsed()) {
            auto selected = select_statements(statements);
            std::optional<Corpus> corpus;
            if (! corpus_spec.empty())
                corpus = load_corpus(corpus_spec);
            SuiteOptions options;
            options.engine.engine = engine;
            options.engine.cross_check = ! no_cross_check;
            options.engine.vertex_cap = vertex_cap_from_environment();
            options.jobs = jobs;
            options.experimental_gp_strong = experimental;
            auto start = std::chrono::steady_clock::now();
            auto summary =
                run_suite(selected, corpus, options, [&](const Verdict & v) { out << to_json(v).dump() << '\n'; });
            out << summary.to_json().dump() << '\n';
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            err << "wall time: " << elapsed.count() << " s\n";
            return summary.fails() == 0 ? 0 : 1;
        }
        else if (corpus_cmd->parsed()) {
            auto corpus = load_corpus(listing);
            for (const auto & g : corpus.singles)
                out << write_graph6(g.graph) << '\n';
            for (const auto & [g, h] : corpus.pairs)
                out << write_graph6(g.graph) << ' ' << write_graph6(h.graph) << '\n';
        }
        else if (list_cmd->parsed()) {
            for (const auto & s : catalog())
                out << s.id << '\t' << (s.single && s.pair ? "single+pair" : s.single ? "single" : "pair") << '\t'
                    << s.summary << '\n';
        }
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace gpos
