#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <gpos/catalog.hpp>

namespace gpos {

struct SuiteOptions {
    EngineOptions engine;
    unsigned jobs = 1;
    bool experimental_gp_strong = false;
};


/// `all` or a comma separated list of statement ids.
inline auto select_statements(std::string_view text) -> std::vector<const Statement *>
{
    std::vector<const Statement *> result;
    if (text == "all") {
        for (const auto & s : catalog())
            result.push_back(&s);
        return result;
    }
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto id = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto * s = &find_statement(id);
        if (std::find(result.begin(), result.end(), s) == result.end())
            result.push_back(s);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return result;
}

namespace detail {
    struct Task {
        const Statement * statement;
        std::vector<const GraphInput *> inputs;
    };

    inline auto run_checker(const Task & task, const EngineOptions & options) -> std::vector<Verdict>
    {
        Recorder rec(task.statement->id, task.inputs);
        try {
            if (task.inputs.size() == 1)
                task.statement->single(*task.inputs[0], options, rec);
            else
                task.statement->pair(*task.inputs[0], *task.inputs[1], options, rec);
        }
        catch (const EngineDisagreement & e) {
            rec.fail("engine_agreement", e.what());
        }
        catch (const CapacityError & e) {
            rec.skip("capacity", e.what());
        }
        return std::move(rec.verdicts());
    }

    inline auto run_task(const Task & task, const EngineOptions & options) -> std::vector<Verdict>
    {
        auto verdicts = run_checker(task, options);
        bool failed = std::any_of(verdicts.begin(), verdicts.end(),
                                  [](const Verdict & v) { return v.outcome == Outcome::fails; });
        if (! failed)
            return verdicts;
        std::vector<Verdict> rerun;
        if (options.engine == Engine::oracle)
            rerun = verdicts;
        else {
            auto oracle = options;
            oracle.engine = Engine::oracle;
            oracle.cross_check = false;
            rerun = run_checker(task, oracle);
        }
        for (auto & v : verdicts) {
            if (v.outcome != Outcome::fails)
                continue;
            auto again = std::find_if(rerun.begin(), rerun.end(), [&](const Verdict & r) { return r.clause == v.clause; });
            v.oracle_confirmed = again != rerun.end() && again->outcome == Outcome::fails;
            if (! *v.oracle_confirmed) {
                if (! v.note.empty())
                    v.note += "; ";
                v.note += "engine disagreement: the oracle engine does not reproduce this failure";
            }
            if (v.counterexample.is_null()) {
                v.counterexample = {{"graph6", v.graph6}};
                if (! v.witness.is_null())
                    v.counterexample["witness"] = v.witness;
            }
        }
        return verdicts;
    }

    inline auto less(const Task & a, const Task & b) -> bool
    {
        auto na = a.statement->number(), nb = b.statement->number();
        if (na != nb)
            return na < nb;
        const auto & a0 = a.inputs[0]->descriptor;
        const auto & b0 = b.inputs[0]->descriptor;
        if (a0 != b0)
            return a0 < b0;
        static const std::string none;
        const auto & a1 = a.inputs.size() > 1 ? a.inputs[1]->descriptor : none;
        const auto & b1 = b.inputs.size() > 1 ? b.inputs[1]->descriptor : none;
        return a1 < b1;
    }
} // namespace detail

/// Running counts per outcome, overall and per statement.
class SuiteSummary {
public:
    auto add(const Verdict & v) -> void
    {
        auto index = static_cast<std::size_t>(v.outcome);
        ++counts_[index];
        auto [it, inserted] = per_.try_emplace(v.statement, std::array<std::size_t, 3>{0, 0, 0});
        if (inserted)
            order_.push_back(v.statement);
        ++it->second[index];
    }

    auto fails() const -> std::size_t { return counts_[1]; }
    auto verdicts() const -> std::size_t { return counts_[0] + counts_[1] + counts_[2]; }

    auto to_json() const -> Json
    {
        Json per_statement = Json::object();
        for (const auto & id : order_) {
            const auto & c = per_.at(id);
            per_statement[id] = {{"holds", c[0]}, {"fails", c[1]}, {"precondition_not_met", c[2]}};
        }
        return {{"summary", true},
                {"verdicts", verdicts()},
                {"holds", counts_[0]},
                {"fails", counts_[1]},
                {"precondition_not_met", counts_[2]},
                {"per_statement", per_statement}};
    }

private:
    std::array<std::size_t, 3> counts_{0, 0, 0};
    std::map<std::string, std::array<std::size_t, 3>> per_;
    std::vector<std::string> order_;
};

struct SuiteReport {
    std::vector<Verdict> verdicts;
    SuiteSummary summary;

    auto fails() const -> std::size_t { return summary.fails(); }
};

using VerdictSink = std::function<void(const Verdict &)>;

/// Runs the statements over the corpus (or their default instances when no
/// corpus is given). Verdicts reach `sink` ordered by statement and
/// instance, whatever the number of jobs.
inline auto run_suite(const std::vector<const Statement *> & selected, const std::optional<Corpus> & corpus,
                      const SuiteOptions & options, const VerdictSink & sink) -> SuiteSummary
{
    SuiteSummary summary;
    if (corpus && corpus->empty())
        return summary;

    std::deque<GraphInput> store;
    std::map<std::string, const GraphInput *> by_descriptor;
    auto intern = [&](const GraphInput & input) -> const GraphInput * {
        auto it = by_descriptor.find(input.descriptor);
        if (it != by_descriptor.end())
            return it->second;
        const auto * stored = &store.emplace_back(input);
        by_descriptor.emplace(stored->descriptor, stored);
        return stored;
    };
    auto named = [&](const std::string & text) { return intern(parse_graph_input(text)); };

    std::vector<const GraphInput *> corpus_singles;
    std::vector<std::pair<const GraphInput *, const GraphInput *>> corpus_pairs;
    if (corpus) {
        if (corpus->kind == Corpus::Kind::singles) {
            for (const auto & g : corpus->singles)
                corpus_singles.push_back(intern(g));
            for (const auto * g : corpus_singles)
                for (const auto & partner : partner_graphs()) {
                    const auto * h = named(partner);
                    corpus_pairs.emplace_back(g, h);
                    corpus_pairs.emplace_back(h, g);
                }
        }
        else {
            for (const auto & [g, h] : corpus->pairs)
                corpus_pairs.emplace_back(intern(g), intern(h));
            for (const auto & g : corpus->factors())
                corpus_singles.push_back(intern(g));
        }
    }

    auto statements = selected;
    if (options.experimental_gp_strong)
        statements.push_back(&experimental_gp_strong());

    std::vector<detail::Task> tasks;
    for (const auto * st : statements) {
        std::vector<const GraphInput *> singles;
        std::vector<std::pair<const GraphInput *, const GraphInput *>> pairs;
        if (! corpus || st->fixed) {
            auto names = st->builtin_singles.empty() && ! st->fixed ? default_singles() : st->builtin_singles;
            for (const auto & text : names)
                singles.push_back(named(text));
            auto pair_names = st->builtin_pairs.empty() && ! st->fixed ? default_pairs() : st->builtin_pairs;
            for (const auto & [g, h] : pair_names)
                pairs.emplace_back(named(g), named(h));
        }
        if (corpus) {
            if (st->fixed) {
                if (st->accepts)
                    for (const auto * g : corpus_singles)
                        if (g->family && st->accepts(*g->family) &&
                            std::find(singles.begin(), singles.end(), g) == singles.end())
                            singles.push_back(g);
            }
            else {
                singles = corpus_singles;
                pairs = corpus_pairs;
            }
        }
        if (st->single)
            for (const auto * g : singles)
                tasks.push_back({st, {g}});
        if (st->pair)
            for (const auto & [g, h] : pairs)
                tasks.push_back({st, {g, h}});
    }
    std::stable_sort(tasks.begin(), tasks.end(), detail::less);

    // Finished tasks are parked until every earlier task has been emitted.
    std::vector<std::optional<std::vector<Verdict>>> parked(tasks.size());
    std::size_t emitted = 0;
    std::mutex lock;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto finish = [&](std::size_t i, std::vector<Verdict> verdicts) {
        std::lock_guard guard(lock);
        parked[i] = std::move(verdicts);
        while (emitted < tasks.size() && parked[emitted]) {
            for (const auto & v : *parked[emitted]) {
                summary.add(v);
                sink(v);
            }
            parked[emitted].reset();
            ++emitted;
        }
    };
    auto worker = [&] {
        for (auto i = next++; i < tasks.size(); i = next++) {
            try {
                finish(i, detail::run_task(tasks[i], options.engine));
            }
            catch (...) {
                std::lock_guard guard(lock);
                if (! failure)
                    failure = std::current_exception();
                next = tasks.size();
            }
        }
    };
    auto jobs = std::max(1u, options.jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return summary;
}

/// Collecting variant.
inline auto run_suite(const std::vector<const Statement *> & selected, const std::optional<Corpus> & corpus,
                      const SuiteOptions & options) -> SuiteReport
{
    SuiteReport report;
    report.summary = run_suite(selected, corpus, options, [&](const Verdict & v) { report.verdicts.push_back(v); });
    return report;
}

} // namespace gpos
