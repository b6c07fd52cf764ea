#pragma once

#include <vector>

#include <gpos/distance.hpp>
#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

/// For each vertex pair, the set of vertices strictly inside some shortest
/// path between them. Empty for adjacent pairs.
///
/// X-positionability is read as interior avoidance: u and v are
/// X-positionable when no vertex of X other than u, v lies on a shortest
/// u,v-path. This is what makes the outer and dual conditions meaningful for
/// pairs with an endpoint outside X.
class Betweenness {
public:
    explicit Betweenness(const Graph & g) : Betweenness(g, DistanceMatrix(g)) {}

    Betweenness(const Graph & g, DistanceMatrix dm) : dm_(std::move(dm)), n_(g.order())
    {
        dm_.require_connected("general position checks");
        interior_.assign(n_ * n_, VertexSet(n_));
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v) {
                auto & inside = interior_[u * n_ + v];
                const auto d = dm_(u, v);
                if (d >= 2)
                    for (Vertex w = 0; w < n_; ++w)
                        if (w != u && w != v && dm_(u, w) + dm_(w, v) == d)
                            inside.insert(w);
                interior_[v * n_ + u] = inside;
            }
    }

    auto order() const -> std::size_t { return n_; }
    auto distances() const -> const DistanceMatrix & { return dm_; }
    auto interior(Vertex u, Vertex v) const -> const VertexSet & { return interior_[u * n_ + v]; }
    auto between(Vertex u, Vertex w, Vertex v) const -> bool { return interior(u, v).contains(w); }

private:
    DistanceMatrix dm_;
    std::size_t n_;
    std::vector<VertexSet> interior_;
};

inline auto is_positionable(const Betweenness & bt, const VertexSet & x, Vertex u, Vertex v) -> bool
{
    if (u == v)
        throw DomainError("is_positionable: u and v must be distinct");
    return ! bt.interior(u, v).intersects(x);
}

namespace detail {
    /// Every pair (u, v) with u in `from`, v in `to`, u != v is X-positionable.
    inline auto all_positionable(const Betweenness & bt, const VertexSet & x, const VertexSet & from,
                                 const VertexSet & to) -> bool
    {
        for (auto u : from)
            for (auto v : to)
                if (u != v && ! is_positionable(bt, x, u, v))
                    return false;
        return true;
    }
} // namespace detail

inline auto is_general_position(const Betweenness & bt, const VertexSet & x) -> bool
{
    return detail::all_positionable(bt, x, x, x);
}

inline auto is_outer_gp(const Betweenness & bt, const VertexSet & x) -> bool
{
    return detail::all_positionable(bt, x, x, x) && detail::all_positionable(bt, x, x, x.complement());
}

inline auto is_dual_gp(const Betweenness & bt, const VertexSet & x) -> bool
{
    auto outside = x.complement();
    return detail::all_positionable(bt, x, x, x) && detail::all_positionable(bt, x, outside, outside);
}

inline auto is_total_gp(const Betweenness & bt, const VertexSet & x) -> bool
{
    auto all = VertexSet::full(bt.order());
    return detail::all_positionable(bt, x, all, all);
}

/// Every shortest path between two members stays inside x.
inline auto is_convex(const Betweenness & bt, const VertexSet & x) -> bool
{
    for (auto u : x)
        for (auto v : x)
            if (u < v && ! bt.interior(u, v).is_subset_of(x))
                return false;
    return true;
}

/// x restricted to an isometric induced subgraph, relabelled to the
/// subgraph's labels (increasing order of the original labels).
inline auto restrict_to_isometric_subgraph(const Graph & g, const DistanceMatrix & dm, const VertexSet & sub,
                                           const VertexSet & x) -> VertexSet
{
    if (! is_isometric_subset(g, dm, sub))
        throw DomainError("restrict_to_isometric_subgraph: subgraph is not isometric");
    auto labels = sub.to_vector();
    VertexSet result(labels.size());
    for (Vertex i = 0; i < labels.size(); ++i)
        if (x.contains(labels[i]))
            result.insert(i);
    return result;
}

} // namespace gpos
