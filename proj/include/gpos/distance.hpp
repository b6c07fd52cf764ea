#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

/// All-pairs hop distances (BFS), with kInfinity across components.
class DistanceMatrix {
public:
    using Distance = std::uint32_t;
    static constexpr Distance kInfinity = std::numeric_limits<std::uint16_t>::max();

    DistanceMatrix() = default;

    explicit DistanceMatrix(const Graph & g) : order_(g.order()), dist_(g.order() * g.order(), kInfinity)
    {
        connected_ = order_ > 0;
        for (Vertex source = 0; source < order_; ++source) {
            VertexSet seen(order_);
            seen.insert(source);
            auto frontier = seen;
            std::uint16_t level = 0;
            while (! frontier.empty()) {
                for (auto v : frontier)
                    dist_[source * order_ + v] = level;
                VertexSet next(order_);
                for (auto v : frontier)
                    next |= g.neighbours(v);
                next -= seen;
                seen |= next;
                frontier = std::move(next);
                ++level;
            }
            if (seen.size() != order_)
                connected_ = false;
        }
    }

    auto order() const -> std::size_t { return order_; }

    auto operator()(Vertex u, Vertex v) const -> Distance { return dist_[u * order_ + v]; }

    auto finite(Vertex u, Vertex v) const -> bool { return (*this)(u, v) != kInfinity; }

    auto connected() const -> bool { return connected_; }

    /// w lies strictly inside some shortest u,v-path.
    auto between(Vertex u, Vertex w, Vertex v) const -> bool
    {
        if (w == u || w == v || ! finite(u, v))
            return false;
        return (*this)(u, w) + (*this)(w, v) == (*this)(u, v);
    }

    /// Throws DomainError unless the underlying graph is connected.
    auto require_connected(const char * operation) const -> void
    {
        if (! connected_)
            throw DomainError(std::string(operation) + " requires a connected graph");
    }

    auto diameter() const -> Distance
    {
        require_connected("diameter");
        return order_ == 0 ? 0 : *std::max_element(dist_.begin(), dist_.end());
    }

private:
    std::size_t order_ = 0;
    std::vector<std::uint16_t> dist_;
    bool connected_ = false;
};

inline auto all_pairs_distances(const Graph & g) -> DistanceMatrix { return DistanceMatrix(g); }

inline auto diameter(const Graph & g) -> DistanceMatrix::Distance { return DistanceMatrix(g).diameter(); }

/// The subgraph induced by `subset` preserves every ambient distance.
inline auto is_isometric_subset(const Graph & g, const DistanceMatrix & dm, const VertexSet & subset) -> bool
{
    auto sub = induced_subgraph(g, subset);
    DistanceMatrix inner(sub.graph);
    for (Vertex i = 0; i < sub.labels.size(); ++i)
        for (Vertex j = i + 1; j < sub.labels.size(); ++j)
            if (inner(i, j) != dm(sub.labels[i], sub.labels[j]))
                return false;
    return true;
}

} // namespace gpos
