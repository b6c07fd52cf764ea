#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <gpos/distance.hpp>
#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

struct CliqueResult {
    std::size_t size = 0;
    VertexSet witness;
};

namespace detail {
    /// Bitset branch and bound with greedy-colouring bounds. Vertices are
    /// renumbered by a degeneracy order (densest core first) so that bit
    /// order equals colouring order.
    class CliqueSearch {
    public:
        explicit CliqueSearch(const Graph & g) : n_(g.order()), position_(g.order()), adjacency_(g.order())
        {
            std::vector<std::size_t> degree(n_);
            std::vector<bool> removed(n_, false);
            for (Vertex v = 0; v < n_; ++v)
                degree[v] = g.degree(v);
            std::vector<Vertex> removal;
            removal.reserve(n_);
            for (std::size_t step = 0; step < n_; ++step) {
                Vertex best = 0;
                bool found = false;
                for (Vertex v = 0; v < n_; ++v)
                    if (! removed[v] && (! found || degree[v] < degree[best])) {
                        best = v;
                        found = true;
                    }
                removed[best] = true;
                removal.push_back(best);
                for (auto w : g.neighbours(best))
                    if (! removed[w])
                        --degree[w];
            }
            label_.assign(removal.rbegin(), removal.rend());
            for (Vertex i = 0; i < n_; ++i)
                position_[label_[i]] = i;
            for (Vertex i = 0; i < n_; ++i) {
                adjacency_[i] = VertexSet(n_);
                for (auto w : g.neighbours(label_[i]))
                    adjacency_[i].insert(position_[w]);
            }
        }

        auto run() -> CliqueResult
        {
            if (n_ > 0) {
                std::vector<Vertex> current;
                expand(current, VertexSet::full(n_));
            }
            CliqueResult result{best_.size(), VertexSet(n_)};
            for (auto p : best_)
                result.witness.insert(label_[p]);
            return result;
        }

    private:
        auto expand(std::vector<Vertex> & current, VertexSet candidates) -> void
        {
            std::vector<Vertex> order;
            std::vector<std::size_t> bound;
            order.reserve(candidates.size());
            bound.reserve(candidates.size());
            {
                auto uncoloured = candidates;
                std::size_t colour = 0;
                while (! uncoloured.empty()) {
                    ++colour;
                    auto available = uncoloured;
                    while (! available.empty()) {
                        auto v = available.first();
                        available.erase(v);
                        available -= adjacency_[v];
                        uncoloured.erase(v);
                        order.push_back(v);
                        bound.push_back(colour);
                    }
                }
            }
            for (auto i = order.size(); i-- > 0;) {
                if (current.size() + bound[i] <= best_.size())
                    return;
                auto v = order[i];
                current.push_back(v);
                auto next = candidates & adjacency_[v];
                if (next.empty()) {
                    if (current.size() > best_.size())
                        best_ = current;
                }
                else
                    expand(current, std::move(next));
                current.pop_back();
                candidates.erase(v);
            }
        }

        std::size_t n_;
        std::vector<Vertex> label_;
        std::vector<Vertex> position_;
        std::vector<VertexSet> adjacency_;
        std::vector<Vertex> best_;
    };
} // namespace detail

/// Exact clique number with a witness; works on any graph, including the
/// (often disconnected) strong resolving graphs.
inline auto max_clique(const Graph & g) -> CliqueResult { return detail::CliqueSearch(g).run(); }

inline auto independence_number(const Graph & g) -> CliqueResult { return max_clique(complement(g)); }

/// Pairs at distance greater than k are joined.
inline auto distance_exceeds_graph(const DistanceMatrix & dm, std::size_t k) -> Graph
{
    Graph result(dm.order());
    for (Vertex u = 0; u < dm.order(); ++u)
        for (Vertex v = u + 1; v < dm.order(); ++v)
            if (dm(u, v) > k)
                result.add_edge(u, v);
    return result;
}

/// Largest set with pairwise distance greater than k (alpha_1 = alpha).
inline auto alpha_k(const Graph & g, std::size_t k) -> CliqueResult
{
    if (k < 1)
        throw DomainError("alpha_k: k must be at least 1");
    DistanceMatrix dm(g);
    dm.require_connected("alpha_k");
    return max_clique(distance_exceeds_graph(dm, k));
}

} // namespace gpos
