#pragma once

#include <charconv>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

inline constexpr int kRandomGraphAttempts = 10'000;

// Generators. Labels are fixed so that witnesses are reproducible.

inline auto empty_graph(std::size_t n) -> Graph { return Graph(n); }

/// 0-1-...-(n-1).
inline auto path_graph(std::size_t n) -> Graph
{
    Graph g(n);
    for (Vertex v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    return g;
}

inline auto cycle_graph(std::size_t n) -> Graph
{
    auto g = path_graph(n);
    g.add_edge(static_cast<Vertex>(n - 1), 0);
    return g;
}

inline auto complete_graph(std::size_t n) -> Graph { return complement(Graph(n)); }

/// K_{1,s}: centre 0, leaves 1..s.
inline auto star_graph(std::size_t s) -> Graph
{
    Graph g(s + 1);
    for (Vertex v = 1; v <= s; ++v)
        g.add_edge(0, v);
    return g;
}

/// K_{1,s} with every edge subdivided r times. Centre 0; arm j occupies
/// 1 + j(r+1) .. (j+1)(r+1), ordered outwards.
inline auto subdivided_star(std::size_t s, std::size_t r) -> Graph
{
    const auto arm = r + 1;
    Graph g(1 + s * arm);
    for (std::size_t j = 0; j < s; ++j) {
        auto first = static_cast<Vertex>(1 + j * arm);
        g.add_edge(0, first);
        for (Vertex i = 1; i < arm; ++i)
            g.add_edge(first + i - 1, first + i);
    }
    return g;
}

/// K_n with a pendant path on t new vertices hung off every clique vertex.
/// Clique is 0..n-1; the path at clique vertex i is n+it .. n+it+t-1.
inline auto clique_paths(std::size_t n, std::size_t t) -> Graph
{
    Graph g(n * (t + 1));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    for (Vertex i = 0; i < n; ++i) {
        auto first = static_cast<Vertex>(n + i * t);
        g.add_edge(i, first);
        for (Vertex k = 1; k < t; ++k)
            g.add_edge(first + k - 1, first + k);
    }
    return g;
}

/// C_n plus a pendant vertex n attached to 0.
inline auto cycle_plus(std::size_t n) -> Graph
{
    Graph g(n + 1);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    g.add_edge(0, static_cast<Vertex>(n));
    return g;
}

/// G(n, p) with p = p_milli/1000, resampled until connected.
inline auto random_connected(std::size_t n, std::uint32_t p_milli, std::uint64_t seed) -> Graph
{
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRandomGraphAttempts; ++attempt) {
        Graph g(n);
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (rng() % 1000 < p_milli)
                    g.add_edge(i, j);
        if (is_connected(g))
            return g;
    }
    throw SpecError("random: no connected sample after " + std::to_string(kRandomGraphAttempts) + " attempts");
}

enum class FamilyTag { path, cycle, complete, empty, star, subdivided_star, clique_paths, cycle_plus, random, join };

struct FamilyTagInfo {
    FamilyTag tag;
    std::string_view name;
    std::size_t arity;
};

inline constexpr FamilyTagInfo kFamilyTags[] = {
    {FamilyTag::path, "path", 1},
    {FamilyTag::cycle, "cycle", 1},
    {FamilyTag::complete, "complete", 1},
    {FamilyTag::empty, "empty", 1},
    {FamilyTag::star, "star", 1},
    {FamilyTag::subdivided_star, "subdivided_star", 2},
    {FamilyTag::clique_paths, "clique_paths", 2},
    {FamilyTag::cycle_plus, "cycle_plus", 1},
    {FamilyTag::random, "random", 3},
    {FamilyTag::join, "join", 0},
};

/// A named graph family plus its integer parameters, e.g. `clique_paths:3,2`
/// or `join:complete:1+cycle:5`.
struct FamilySpec {
    FamilyTag tag = FamilyTag::path;
    std::vector<std::uint64_t> params;
    std::vector<FamilySpec> parts;

    friend auto operator==(const FamilySpec &, const FamilySpec &) -> bool = default;
};

inline auto family_tag_name(FamilyTag tag) -> std::string_view
{
    for (const auto & info : kFamilyTags)
        if (info.tag == tag)
            return info.name;
    return "?";
}

inline auto to_string(const FamilySpec & spec) -> std::string
{
    std::string out(family_tag_name(spec.tag));
    out += ':';
    if (spec.tag == FamilyTag::join)
        return spec.parts.size() == 2 ? out + to_string(spec.parts[0]) + "+" + to_string(spec.parts[1]) : out + "?";
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(spec.params[i]);
    }
    return out;
}

namespace detail {
    inline auto parse_unsigned(std::string_view text) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            throw SpecError("family: expected a non-negative integer, got '" + std::string(text) + "'");
        return value;
    }

    inline auto check_ranges(const FamilySpec & spec) -> void
    {
        const auto & p = spec.params;
        auto fail = [&](const char * what) { throw SpecError("family " + to_string(spec) + ": " + what); };
        for (const auto & info : kFamilyTags)
            if (info.tag == spec.tag && info.arity != p.size())
                fail("wrong number of parameters");
        if (spec.tag == FamilyTag::join && spec.parts.size() != 2)
            fail("join needs exactly two operands");
        switch (spec.tag) {
        case FamilyTag::path:
        case FamilyTag::complete:
        case FamilyTag::empty:
            if (p[0] < 1)
                fail("needs n >= 1");
            break;
        case FamilyTag::cycle:
        case FamilyTag::cycle_plus:
            if (p[0] < 3)
                fail("needs n >= 3");
            break;
        case FamilyTag::star:
            if (p[0] < 1)
                fail("needs s >= 1");
            break;
        case FamilyTag::subdivided_star:
            if (p[0] < 2)
                fail("needs s >= 2");
            break;
        case FamilyTag::clique_paths:
            if (p[0] < 2 || p[1] < 1)
                fail("needs n >= 2 and t >= 1");
            break;
        case FamilyTag::random:
            if (p[0] < 1 || p[1] == 0 || p[1] >= 1000)
                fail("needs n >= 1 and 0 < p_milli < 1000");
            break;
        case FamilyTag::join:
            break;
        }
        if (spec.tag != FamilyTag::join && p[0] > 4096)
            fail("order parameter above 4096");
        if (spec.tag == FamilyTag::subdivided_star && (p[1] > 4096 || 1 + p[0] * (p[1] + 1) > 4096))
            fail("order above 4096");
        if (spec.tag == FamilyTag::clique_paths && (p[1] > 4096 || p[0] * (p[1] + 1) > 4096))
            fail("order above 4096");
    }
} // namespace detail

/// Parses a family spec without the `family:` prefix.
inline auto parse_family_spec(std::string_view text) -> FamilySpec
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw SpecError("family: missing ':' in '" + std::string(text) + "'");
    auto name = text.substr(0, colon);
    auto rest = text.substr(colon + 1);

    const FamilyTagInfo * info = nullptr;
    for (const auto & candidate : kFamilyTags)
        if (candidate.name == name)
            info = &candidate;
    if (! info)
        throw SpecError("family: unknown family '" + std::string(name) + "'");

    FamilySpec spec;
    spec.tag = info->tag;
    if (spec.tag == FamilyTag::join) {
        // Either operand may itself be a join, so try every '+' split.
        for (auto plus = rest.find('+'); plus != std::string_view::npos; plus = rest.find('+', plus + 1)) {
            try {
                auto left = parse_family_spec(rest.substr(0, plus));
                auto right = parse_family_spec(rest.substr(plus + 1));
                spec.parts = {std::move(left), std::move(right)};
                return spec;
            }
            catch (const SpecError &) {
            }
        }
        throw SpecError("family: join needs two family specs separated by '+'");
    }

    std::size_t start = 0;
    while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        auto token = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        spec.params.push_back(detail::parse_unsigned(token));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (spec.params.size() != info->arity)
        throw SpecError("family " + std::string(name) + ": expected " + std::to_string(info->arity) + " parameter(s)");
    detail::check_ranges(spec);
    return spec;
}

inline auto generate(const FamilySpec & spec) -> Graph
{
    detail::check_ranges(spec);
    const auto & p = spec.params;
    switch (spec.tag) {
    case FamilyTag::path:
        return path_graph(p[0]);
    case FamilyTag::cycle:
        return cycle_graph(p[0]);
    case FamilyTag::complete:
        return complete_graph(p[0]);
    case FamilyTag::empty:
        return empty_graph(p[0]);
    case FamilyTag::star:
        return star_graph(p[0]);
    case FamilyTag::subdivided_star:
        return subdivided_star(p[0], p[1]);
    case FamilyTag::clique_paths:
        return clique_paths(p[0], p[1]);
    case FamilyTag::cycle_plus:
        return cycle_plus(p[0]);
    case FamilyTag::random:
        return random_connected(p[0], static_cast<std::uint32_t>(p[1]), p[2]);
    case FamilyTag::join:
        return join(generate(spec.parts.at(0)), generate(spec.parts.at(1)));
    }
    throw SpecError("family: unhandled tag");
}

inline auto generate(std::string_view text) -> Graph { return generate(parse_family_spec(text)); }

} // namespace gpos
