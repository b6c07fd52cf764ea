#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

inline constexpr std::size_t kDefaultVertexCap = 4096;

enum class ProductKind { strong, lexicographic };

/// Names a factor: left is G and right is H in G x H.
enum class Factor { left, right };

/// Product of two graphs with the fixed codec (g, h) <-> g * n_H + h.
class ProductGraph {
public:
    ProductGraph(Graph graph, std::size_t left_order, std::size_t right_order, ProductKind kind) :
        graph_(std::move(graph)), left_order_(left_order), right_order_(right_order), kind_(kind)
    {
    }

    auto graph() const -> const Graph & { return graph_; }
    auto left_order() const -> std::size_t { return left_order_; }
    auto right_order() const -> std::size_t { return right_order_; }
    auto kind() const -> ProductKind { return kind_; }

    auto encode(Vertex g, Vertex h) const -> Vertex { return static_cast<Vertex>(g * right_order_ + h); }

    auto decode(Vertex v) const -> std::pair<Vertex, Vertex>
    {
        return {static_cast<Vertex>(v / right_order_), static_cast<Vertex>(v % right_order_)};
    }

private:
    Graph graph_;
    std::size_t left_order_;
    std::size_t right_order_;
    ProductKind kind_;
};

namespace detail {
    inline auto check_product_capacity(const Graph & g, const Graph & h, std::size_t vertex_cap) -> void
    {
        if (g.order() == 0 || h.order() == 0)
            throw DomainError("product: factors must be non-empty");
        if (g.order() * h.order() > vertex_cap)
            throw CapacityError("product: order " + std::to_string(g.order() * h.order()) + " exceeds the vertex cap " +
                                std::to_string(vertex_cap));
    }
} // namespace detail

/// Closed neighbourhoods multiply: N[(g,h)] = N[g] x N[h].
inline auto strong_product(const Graph & g, const Graph & h, std::size_t vertex_cap = kDefaultVertexCap) -> ProductGraph
{
    detail::check_product_capacity(g, h, vertex_cap);
    const auto nh = h.order();
    Graph result(g.order() * nh);
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < nh; ++b) {
            auto u = static_cast<Vertex>(a * nh + b);
            for (auto c : g.closed_neighbourhood(a))
                for (auto d : h.closed_neighbourhood(b)) {
                    auto v = static_cast<Vertex>(c * nh + d);
                    if (u < v)
                        result.add_edge(u, v);
                }
        }
    return ProductGraph(std::move(result), g.order(), nh, ProductKind::strong);
}

/// (g,h) ~ (g',h') iff gg' in E(G), or g = g' and hh' in E(H).
inline auto lexicographic_product(const Graph & g, const Graph & h, std::size_t vertex_cap = kDefaultVertexCap)
    -> ProductGraph
{
    detail::check_product_capacity(g, h, vertex_cap);
    const auto nh = h.order();
    Graph result(g.order() * nh);
    for (Vertex a = 0; a < g.order(); ++a) {
        for (auto [b, d] : h.edges())
            result.add_edge(static_cast<Vertex>(a * nh + b), static_cast<Vertex>(a * nh + d));
        for (auto c : g.neighbours(a))
            if (a < c)
                for (Vertex b = 0; b < nh; ++b)
                    for (Vertex d = 0; d < nh; ++d)
                        result.add_edge(static_cast<Vertex>(a * nh + b), static_cast<Vertex>(c * nh + d));
    }
    return ProductGraph(std::move(result), g.order(), nh, ProductKind::lexicographic);
}

inline auto product(ProductKind kind, const Graph & g, const Graph & h, std::size_t vertex_cap = kDefaultVertexCap)
    -> ProductGraph
{
    return kind == ProductKind::strong ? strong_product(g, h, vertex_cap) : lexicographic_product(g, h, vertex_cap);
}

/// Image of x under p_G (Factor::left) or p_H (Factor::right).
inline auto project(const ProductGraph & p, const VertexSet & x, Factor which) -> VertexSet
{
    VertexSet result(which == Factor::left ? p.left_order() : p.right_order());
    for (auto v : x) {
        auto [g, h] = p.decode(v);
        result.insert(which == Factor::left ? g : h);
    }
    return result;
}

/// The layer that is a copy of the given factor: for Factor::left the
/// G-layer G^anchor (anchor in V(H)); for Factor::right the H-layer
/// ^anchor H (anchor in V(G)).
inline auto layer(const ProductGraph & p, Factor copy_of, Vertex anchor) -> VertexSet
{
    VertexSet result(p.graph().order());
    if (copy_of == Factor::left) {
        if (anchor >= p.right_order())
            throw DomainError("layer: anchor is not a vertex of H");
        for (Vertex g = 0; g < p.left_order(); ++g)
            result.insert(p.encode(g, anchor));
    }
    else {
        if (anchor >= p.left_order())
            throw DomainError("layer: anchor is not a vertex of G");
        for (Vertex h = 0; h < p.right_order(); ++h)
            result.insert(p.encode(anchor, h));
    }
    return result;
}

/// Product vertex set X x Y.
inline auto cartesian_set(const ProductGraph & p, const VertexSet & x, const VertexSet & y) -> VertexSet
{
    VertexSet result(p.graph().order());
    for (auto g : x)
        for (auto h : y)
            result.insert(p.encode(g, h));
    return result;
}

} // namespace gpos
