#pragma once

#include <array>
#include <optional>
#include <string>

#include <gpos/clique.hpp>
#include <gpos/derived.hpp>
#include <gpos/distance.hpp>
#include <gpos/graph.hpp>
#include <gpos/position_search.hpp>
#include <gpos/products.hpp>

namespace gpos {

struct EngineOptions {
    Engine engine = Engine::characterization;
    /// Characterization results on graphs up to cross_check_limit vertices
    /// are recomputed by the oracle engine and compared.
    bool cross_check = true;
    std::size_t cross_check_limit = 8;
    std::size_t vertex_cap = kDefaultVertexCap;
};

class EngineDisagreement : public Error {
public:
    EngineDisagreement(PositionKind kind, std::size_t characterization, std::size_t oracle) :
        Error("engine disagreement on " + std::string(to_string(kind)) + ": characterization " +
              std::to_string(characterization) + ", oracle " + std::to_string(oracle)),
        kind_(kind), characterization_(characterization), oracle_(oracle)
    {
    }

    auto kind() const -> PositionKind { return kind_; }
    auto characterization() const -> std::size_t { return characterization_; }
    auto oracle() const -> std::size_t { return oracle_; }

private:
    PositionKind kind_;
    std::size_t characterization_, oracle_;
};

/// Lazily computed facts about one graph. Not thread-safe; use one per task.
class Analysis {
public:
    Analysis(Graph g, const EngineOptions & options) : graph_(std::move(g)), options_(options) {}

    auto graph() const -> const Graph & { return graph_; }
    auto order() const -> std::size_t { return graph_.order(); }
    auto options() const -> const EngineOptions & { return options_; }

    auto connected() -> bool
    {
        if (! connected_)
            connected_ = is_connected(graph_);
        return *connected_;
    }

    auto distances() -> const DistanceMatrix &
    {
        if (! distances_)
            distances_.emplace(graph_);
        return *distances_;
    }

    auto betweenness() -> const Betweenness &
    {
        if (! betweenness_)
            betweenness_.emplace(graph_, distances());
        return *betweenness_;
    }

    auto diameter() -> std::size_t { return distances().diameter(); }

    auto simplicial() -> const VertexSet &
    {
        if (! simplicial_)
            simplicial_ = simplicial_vertices(graph_);
        return *simplicial_;
    }

    auto s() -> std::size_t { return simplicial().size(); }

    auto boundary_report() -> const BoundaryReport &
    {
        if (! boundary_)
            boundary_ = boundary(graph_, distances());
        return *boundary_;
    }

    auto b() -> std::size_t { return boundary_report().b(); }

    auto sr() -> const StrongResolvingGraph &
    {
        if (! sr_)
            sr_ = strong_resolving_graph(graph_, distances());
        return *sr_;
    }

    auto alpha() -> const CliqueResult &
    {
        if (! alpha_)
            alpha_ = independence_number(graph_);
        return *alpha_;
    }

    auto alpha_k(std::size_t k) -> CliqueResult
    {
        if (k < 1)
            throw DomainError("alpha_k: k must be at least 1");
        return max_clique(distance_exceeds_graph(distances(), k));
    }

    auto twin_free() -> bool
    {
        if (! twin_free_)
            twin_free_ = is_twin_free(graph_);
        return *twin_free_;
    }

    /// Maximum position set under the configured engine, cross-checked
    /// against the oracle on small graphs.
    auto position(PositionKind kind) -> const PositionResult &
    {
        auto & slot = positions_[static_cast<std::size_t>(kind)];
        if (! slot) {
            slot = position_number(graph_, betweenness(), kind, options_.engine);
            if (options_.engine == Engine::characterization && options_.cross_check &&
                order() <= options_.cross_check_limit) {
                auto check = oracle_position(kind);
                if (check.size != slot->size)
                    throw EngineDisagreement(kind, slot->size, check.size);
            }
        }
        return *slot;
    }

    auto oracle_position(PositionKind kind) -> const PositionResult &
    {
        auto & slot = oracle_positions_[static_cast<std::size_t>(kind)];
        if (! slot)
            slot = position_number(graph_, betweenness(), kind, Engine::oracle);
        return *slot;
    }

    auto gp() -> std::size_t { return position(PositionKind::general).size; }
    auto gp_t() -> std::size_t { return position(PositionKind::total).size; }
    auto gp_o() -> std::size_t { return position(PositionKind::outer).size; }
    auto gp_d() -> std::size_t { return position(PositionKind::dual).size; }

private:
    Graph graph_;
    EngineOptions options_;
    std::optional<bool> connected_, twin_free_;
    std::optional<DistanceMatrix> distances_;
    std::optional<Betweenness> betweenness_;
    std::optional<VertexSet> simplicial_;
    std::optional<BoundaryReport> boundary_;
    std::optional<StrongResolvingGraph> sr_;
    std::optional<CliqueResult> alpha_;
    std::array<std::optional<PositionResult>, 4> positions_, oracle_positions_;
};

} // namespace gpos
