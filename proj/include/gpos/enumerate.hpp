#pragma once

#include <cstdint>
#include <vector>

#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

inline constexpr std::size_t kEnumerateMaxOrder = 6;

/// All labeled connected graphs on n vertices. Edge masks are read in graph6
/// bit order (column-major upper triangle) and visited in increasing order.
inline auto enumerate_connected(std::size_t n) -> std::vector<Graph>
{
    if (n < 1)
        throw DomainError("enumerate_connected: n must be at least 1");
    if (n > kEnumerateMaxOrder)
        throw CapacityError("enumerate_connected: supported up to n = " + std::to_string(kEnumerateMaxOrder));
    std::vector<Edge> slots;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            slots.emplace_back(i, j);
    std::vector<Graph> result;
    const std::uint64_t limit = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Graph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1)
                g.add_edge(slots[k].first, slots[k].second);
        if (is_connected(g))
            result.push_back(std::move(g));
    }
    return result;
}

} // namespace gpos
