#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gpos/enumerate.hpp>
#include <gpos/error.hpp>
#include <gpos/families.hpp>
#include <gpos/graph6.hpp>

namespace gpos {

inline constexpr std::string_view kFamilyPrefix = "family:";

/// A graph together with the text it came from: `family:<spec>` for
/// generated graphs, the graph6 line otherwise.
struct GraphInput {
    std::string descriptor;
    Graph graph;
    std::optional<FamilySpec> family;
};

inline auto family_input(const FamilySpec & spec) -> GraphInput
{
    return {std::string(kFamilyPrefix) + to_string(spec), generate(spec), spec};
}

inline auto graph6_input(std::string_view line) -> GraphInput
{
    auto g = parse_graph6(line);
    auto text = write_graph6(g);
    return {std::move(text), std::move(g), std::nullopt};
}

/// Accepts `family:<spec>` or a graph6 line (graph6 never contains ':').
inline auto parse_graph_input(std::string_view text) -> GraphInput
{
    if (text.starts_with(kFamilyPrefix))
        return family_input(parse_family_spec(text.substr(kFamilyPrefix.size())));
    return graph6_input(text);
}

struct Corpus {
    enum class Kind { singles, pairs };

    Kind kind = Kind::singles;
    std::vector<GraphInput> singles;
    std::vector<std::pair<GraphInput, GraphInput>> pairs;

    auto empty() const -> bool { return singles.empty() && pairs.empty(); }

    /// Distinct factors of a pair corpus, in first-appearance order.
    auto factors() const -> std::vector<GraphInput>
    {
        std::vector<GraphInput> result;
        auto add = [&](const GraphInput & input) {
            for (const auto & seen : result)
                if (seen.descriptor == input.descriptor)
                    return;
            result.push_back(input);
        };
        for (const auto & [g, h] : pairs) {
            add(g);
            add(h);
        }
        return result;
    }
};

namespace detail {
    /// `a` or `a-b`.
    inline auto parse_order_range(std::string_view text) -> std::pair<std::size_t, std::size_t>
    {
        auto dash = text.find('-');
        if (dash == std::string_view::npos) {
            auto n = parse_unsigned(text);
            return {n, n};
        }
        auto lo = parse_unsigned(text.substr(0, dash));
        auto hi = parse_unsigned(text.substr(dash + 1));
        if (lo > hi)
            throw SpecError("exhaustive: empty range '" + std::string(text) + "'");
        return {lo, hi};
    }

    /// Splits on commas; a token that does not start with a letter continues
    /// the previous spec, so `cycle:5,subdivided_star:3,1` is two specs.
    inline auto split_family_list(std::string_view text) -> std::vector<std::string>
    {
        std::vector<std::string> specs;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (! token.empty() && std::isalpha(static_cast<unsigned char>(token.front())))
                specs.emplace_back(token);
            else if (specs.empty())
                throw SpecError("family list must start with a family name");
            else
                specs.back().append(",").append(token);
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return specs;
    }

    inline auto load_singles(std::string_view spec) -> std::vector<GraphInput>
    {
        std::vector<GraphInput> result;
        if (spec.starts_with("exhaustive:")) {
            auto [lo, hi] = parse_order_range(spec.substr(11));
            for (auto n = lo; n <= hi; ++n)
                for (auto & g : enumerate_connected(n)) {
                    auto text = write_graph6(g);
                    result.push_back({std::move(text), std::move(g), std::nullopt});
                }
            return result;
        }
        if (spec.starts_with("file:")) {
            std::string path(spec.substr(5));
            std::ifstream in(path);
            if (! in)
                throw Error("corpus: cannot open '" + path + "'");
            std::string line;
            std::size_t number = 0;
            while (std::getline(in, line)) {
                ++number;
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.empty())
                    continue;
                try {
                    result.push_back(parse_graph_input(line));
                }
                catch (const Error & e) {
                    throw SpecError(path + ":" + std::to_string(number) + ": " + e.what());
                }
            }
            if (in.bad())
                throw Error("corpus: read error on '" + path + "'");
            return result;
        }
        if (spec.starts_with(kFamilyPrefix)) {
            for (const auto & item : split_family_list(spec.substr(kFamilyPrefix.size())))
                result.push_back(family_input(parse_family_spec(item)));
            return result;
        }
        throw SpecError("corpus: unknown spec '" + std::string(spec) + "'");
    }
} // namespace detail

/// `exhaustive:n` (or `exhaustive:a-b`), `file:<path>`,
/// `family:<spec>[,<spec>...]` or `pairs:<A>x<B>` with A, B any of the former.
inline auto load_corpus(std::string_view spec) -> Corpus
{
    Corpus corpus;
    if (! spec.starts_with("pairs:")) {
        corpus.singles = detail::load_singles(spec);
        return corpus;
    }
    corpus.kind = Corpus::Kind::pairs;
    auto body = spec.substr(6);
    for (auto x = body.find('x'); x != std::string_view::npos; x = body.find('x', x + 1)) {
        std::vector<GraphInput> left, right;
        try {
            left = detail::load_singles(body.substr(0, x));
            right = detail::load_singles(body.substr(x + 1));
        }
        catch (const SpecError &) {
            continue;
        }
        for (const auto & g : left)
            for (const auto & h : right)
                corpus.pairs.emplace_back(g, h);
        return corpus;
    }
    throw SpecError("corpus: pairs needs '<spec>x<spec>', got '" + std::string(spec) + "'");
}

} // namespace gpos
