#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include <gpos/clique.hpp>
#include <gpos/derived.hpp>
#include <gpos/positions.hpp>

namespace gpos {

enum class PositionKind { general, outer, dual, total };

/// oracle: searches checked against the definitions only.
/// characterization: s(G) for total, omega(G_SR) for outer, convexity
/// propagation for dual, triple-conflict branch and bound for general.
enum class Engine { characterization, oracle };

inline auto to_string(PositionKind kind) -> std::string_view
{
    switch (kind) {
    case PositionKind::general:
        return "gp";
    case PositionKind::outer:
        return "gp_o";
    case PositionKind::dual:
        return "gp_d";
    case PositionKind::total:
        return "gp_t";
    }
    return "?";
}

inline auto to_string(Engine engine) -> std::string_view
{
    return engine == Engine::oracle ? "oracle" : "characterization";
}

struct PositionResult {
    std::size_t size = 0;
    VertexSet witness;
};

inline auto satisfies(const Betweenness & bt, PositionKind kind, const VertexSet & x) -> bool
{
    switch (kind) {
    case PositionKind::general:
        return is_general_position(bt, x);
    case PositionKind::outer:
        return is_outer_gp(bt, x);
    case PositionKind::dual:
        return is_dual_gp(bt, x);
    case PositionKind::total:
        return is_total_gp(bt, x);
    }
    return false;
}

namespace detail {
    /// Include-first subset search for a property closed under taking
    /// subsets; every extension is checked with the full definition.
    class HereditarySearch {
    public:
        HereditarySearch(const Betweenness & bt, PositionKind kind) : bt_(bt), kind_(kind), n_(bt.order()) {}

        auto run() -> PositionResult
        {
            VertexSet current(n_);
            best_ = current;
            visit(0, current);
            return {best_.size(), best_};
        }

    private:
        auto visit(Vertex next, VertexSet & current) -> void
        {
            const auto size = current.size();
            if (size > best_.size())
                best_ = current;
            if (size + (n_ - next) <= best_.size())
                return;
            for (Vertex v = next; v < n_; ++v) {
                if (size + (n_ - v) <= best_.size())
                    return;
                current.insert(v);
                if (satisfies(bt_, kind_, current))
                    visit(v + 1, current);
                current.erase(v);
            }
        }

        const Betweenness & bt_;
        PositionKind kind_;
        std::size_t n_;
        VertexSet best_;
    };

    /// Inclusion/exclusion search for dual sets using only definition-level
    /// cuts: an included vertex may not sit between two included vertices,
    /// nor between two excluded ones.
    class DualOracleSearch {
    public:
        explicit DualOracleSearch(const Betweenness & bt) : bt_(bt), n_(bt.order()), in_(n_), out_(n_) {}

        auto run() -> PositionResult
        {
            best_ = VertexSet(n_);
            found_ = false;
            visit(0);
            return {best_.size(), best_};
        }

    private:
        auto include_ok(Vertex w) const -> bool
        {
            for (auto a : in_) {
                if (bt_.interior(w, a).intersects(in_))
                    return false;
                for (auto b : in_)
                    if (a < b && bt_.between(a, w, b))
                        return false;
            }
            for (auto u : out_)
                for (auto v : out_)
                    if (u < v && bt_.between(u, w, v))
                        return false;
            return true;
        }

        auto exclude_ok(Vertex v) const -> bool
        {
            for (auto u : out_)
                if (bt_.interior(u, v).intersects(in_))
                    return false;
            return true;
        }

        auto visit(Vertex next) -> void
        {
            if (found_ && in_.size() + (n_ - next) <= best_.size())
                return;
            if (next == n_) {
                if (! is_dual_gp(bt_, in_))
                    throw Error("dual oracle search reached a non-dual leaf");
                best_ = in_;
                found_ = true;
                return;
            }
            if (include_ok(next)) {
                in_.insert(next);
                visit(next + 1);
                in_.erase(next);
            }
            if (exclude_ok(next)) {
                out_.insert(next);
                visit(next + 1);
                out_.erase(next);
            }
        }

        const Betweenness & bt_;
        std::size_t n_;
        VertexSet in_, out_, best_;
        bool found_ = false;
    };

    /// Maximum set with no vertex strictly between two others: independent
    /// sets of the 3-uniform hypergraph of blocked triples.
    class GeneralPositionSearch {
    public:
        explicit GeneralPositionSearch(const Betweenness & bt) : n_(bt.order()), conflict_(n_ * n_, VertexSet(n_))
        {
            for (Vertex u = 0; u < n_; ++u)
                for (Vertex v = u + 1; v < n_; ++v)
                    for (auto w : bt.interior(u, v)) {
                        conflict_[u * n_ + v].insert(w);
                        conflict_[v * n_ + u].insert(w);
                        conflict_[u * n_ + w].insert(v);
                        conflict_[w * n_ + u].insert(v);
                        conflict_[v * n_ + w].insert(u);
                        conflict_[w * n_ + v].insert(u);
                    }
        }

        auto run() -> PositionResult
        {
            std::vector<Vertex> current;
            best_.clear();
            visit(current, VertexSet::full(n_));
            return {best_.size(), VertexSet::from_range(n_, best_)};
        }

    private:
        auto visit(std::vector<Vertex> & current, VertexSet candidates) -> void
        {
            if (current.size() > best_.size())
                best_ = current;
            while (! candidates.empty()) {
                if (current.size() + candidates.size() <= best_.size())
                    return;
                auto v = candidates.first();
                candidates.erase(v);
                auto next = candidates;
                for (auto a : current)
                    next -= conflict_[a * n_ + v];
                current.push_back(v);
                visit(current, std::move(next));
                current.pop_back();
            }
        }

        std::size_t n_;
        std::vector<VertexSet> conflict_;
        std::vector<Vertex> best_;
    };

    /// Dual sets as general position sets with convex complement. Each
    /// blocked triple (u, w, v) with w inside a u,v-geodesic forces: if w is
    /// in the set then exactly one of u, v is. Unit propagation over these
    /// constraints drives the branch and bound.
    class DualPropagationSearch {
    public:
        explicit DualPropagationSearch(const Betweenness & bt) : n_(bt.order()), state_(n_, kUnknown), touching_(n_)
        {
            for (Vertex u = 0; u < n_; ++u)
                for (Vertex v = u + 1; v < n_; ++v)
                    for (auto w : bt.interior(u, v)) {
                        auto index = static_cast<std::uint32_t>(triples_.size());
                        triples_.push_back({u, w, v});
                        touching_[u].push_back(index);
                        touching_[v].push_back(index);
                        touching_[w].push_back(index);
                    }
        }

        auto run() -> PositionResult
        {
            unknown_ = n_;
            best_ = VertexSet(n_);
            found_ = false;
            visit();
            return {best_.size(), best_};
        }

    private:
        static constexpr std::int8_t kUnknown = -1, kOut = 0, kIn = 1;

        struct Triple {
            Vertex end1, middle, end2;
        };

        auto assign(Vertex v, std::int8_t value) -> void
        {
            state_[v] = value;
            trail_.push_back(v);
            --unknown_;
            if (value == kIn)
                ++in_count_;
        }

        auto undo_to(std::size_t mark) -> void
        {
            while (trail_.size() > mark) {
                auto v = trail_.back();
                trail_.pop_back();
                if (state_[v] == kIn)
                    --in_count_;
                state_[v] = kUnknown;
                ++unknown_;
            }
        }

        /// Assigns and propagates; false on contradiction.
        auto set_and_propagate(Vertex v, std::int8_t value) -> bool
        {
            auto head = trail_.size();
            assign(v, value);
            while (head < trail_.size()) {
                auto x = trail_[head++];
                for (auto index : touching_[x]) {
                    const auto & t = triples_[index];
                    auto m = state_[t.middle], a = state_[t.end1], b = state_[t.end2];
                    if (m == kOut)
                        continue;
                    if (m == kIn) {
                        if (a != kUnknown && b != kUnknown) {
                            if (a == b)
                                return false;
                        }
                        else if (a != kUnknown)
                            assign(t.end2, a == kIn ? kOut : kIn);
                        else if (b != kUnknown)
                            assign(t.end1, b == kIn ? kOut : kIn);
                    }
                    else if (a != kUnknown && a == b)
                        assign(t.middle, kOut);
                }
            }
            return true;
        }

        auto visit() -> void
        {
            if (found_ && in_count_ + unknown_ <= best_.size())
                return;
            if (unknown_ == 0) {
                best_ = VertexSet(n_);
                for (Vertex v = 0; v < n_; ++v)
                    if (state_[v] == kIn)
                        best_.insert(v);
                found_ = true;
                return;
            }
            Vertex pick = 0;
            while (state_[pick] != kUnknown)
                ++pick;
            for (auto value : {kIn, kOut}) {
                auto mark = trail_.size();
                if (set_and_propagate(pick, value))
                    visit();
                undo_to(mark);
            }
        }

        std::size_t n_;
        std::vector<std::int8_t> state_;
        std::vector<Triple> triples_;
        std::vector<std::vector<std::uint32_t>> touching_;
        std::vector<Vertex> trail_;
        std::size_t unknown_ = 0, in_count_ = 0;
        VertexSet best_;
        bool found_ = false;
    };
} // namespace detail

inline auto position_number(const Graph & g, const Betweenness & bt, PositionKind kind, Engine engine)
    -> PositionResult
{
    if (engine == Engine::oracle) {
        if (kind == PositionKind::dual)
            return detail::DualOracleSearch(bt).run();
        return detail::HereditarySearch(bt, kind).run();
    }
    switch (kind) {
    case PositionKind::total: {
        auto s = simplicial_vertices(g);
        return {s.size(), s};
    }
    case PositionKind::outer: {
        auto sr = strong_resolving_graph(g, bt.distances());
        auto clique = max_clique(sr.full);
        return {clique.size, clique.witness};
    }
    case PositionKind::dual:
        return detail::DualPropagationSearch(bt).run();
    case PositionKind::general:
        return detail::GeneralPositionSearch(bt).run();
    }
    return {};
}

inline auto position_number(const Graph & g, PositionKind kind, Engine engine = Engine::characterization)
    -> PositionResult
{
    return position_number(g, Betweenness(g), kind, engine);
}

inline auto gp_number(const Graph & g, Engine engine = Engine::characterization) -> PositionResult
{
    return position_number(g, PositionKind::general, engine);
}

inline auto gp_outer(const Graph & g, Engine engine = Engine::characterization) -> PositionResult
{
    return position_number(g, PositionKind::outer, engine);
}

inline auto gp_dual(const Graph & g, Engine engine = Engine::characterization) -> PositionResult
{
    return position_number(g, PositionKind::dual, engine);
}

inline auto gp_total(const Graph & g, Engine engine = Engine::characterization) -> PositionResult
{
    return position_number(g, PositionKind::total, engine);
}

} // namespace gpos
