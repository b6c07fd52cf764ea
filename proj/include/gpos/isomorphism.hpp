#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

inline constexpr std::size_t kIsomorphismMaxOrder = 12;

namespace detail {
    class IsomorphismSearch {
    public:
        IsomorphismSearch(const Graph & g, const Graph & h) : g_(g), h_(h), map_(g.order()), used_(h.order(), false) {}

        auto run() -> std::optional<std::vector<Vertex>>
        {
            if (extend(0))
                return map_;
            return std::nullopt;
        }

    private:
        auto extend(Vertex v) -> bool
        {
            if (v == g_.order())
                return true;
            for (Vertex w = 0; w < h_.order(); ++w) {
                if (used_[w] || g_.degree(v) != h_.degree(w))
                    continue;
                bool ok = true;
                for (Vertex u = 0; u < v && ok; ++u)
                    ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
                if (! ok)
                    continue;
                map_[v] = w;
                used_[w] = true;
                if (extend(v + 1))
                    return true;
                used_[w] = false;
            }
            return false;
        }

        const Graph & g_;
        const Graph & h_;
        std::vector<Vertex> map_;
        std::vector<bool> used_;
    };

    inline auto degree_sequence(const Graph & g) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result;
        for (Vertex v = 0; v < g.order(); ++v)
            result.push_back(g.degree(v));
        std::sort(result.begin(), result.end());
        return result;
    }
} // namespace detail

/// Brute-force isomorphism with degree pruning; map[v] is the image of v.
inline auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<std::vector<Vertex>>
{
    if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder)
        throw CapacityError("find_isomorphism: supported up to " + std::to_string(kIsomorphismMaxOrder) + " vertices");
    if (g.order() != h.order() || g.size() != h.size() || detail::degree_sequence(g) != detail::degree_sequence(h))
        return std::nullopt;
    return detail::IsomorphismSearch(g, h).run();
}

inline auto are_isomorphic(const Graph & g, const Graph & h) -> bool { return find_isomorphism(g, h).has_value(); }

} // namespace gpos
