#pragma once

#include <vector>

#include <gpos/gpos.hpp>

namespace gpos::fixtures {

/// Every labeled connected graph with 1..max_order vertices.
inline auto connected_graphs(std::size_t max_order) -> std::vector<Graph>
{
    std::vector<Graph> result;
    for (std::size_t n = 1; n <= max_order; ++n)
        for (auto & g : enumerate_connected(n))
            result.push_back(std::move(g));
    return result;
}

inline auto small_families() -> std::vector<Graph>
{
    std::vector<Graph> result;
    for (const char * spec : {"path:1", "path:2", "path:5", "cycle:3", "cycle:5", "cycle:7", "complete:4", "star:3",
                              "subdivided_star:3,1", "subdivided_star:2,2", "clique_paths:3,1", "clique_paths:2,2",
                              "cycle_plus:5", "cycle_plus:6", "join:complete:1+path:4", "random:9,300,7"})
        result.push_back(generate(spec));
    return result;
}

} // namespace gpos::fixtures
