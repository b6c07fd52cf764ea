#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include <gpos/corpus.hpp>
#include <gpos/vertex_set.hpp>

namespace gpos {

using Json = nlohmann::ordered_json;

enum class Outcome { holds, fails, precondition_not_met };

inline auto to_string(Outcome outcome) -> std::string_view
{
    switch (outcome) {
    case Outcome::holds:
        return "holds";
    case Outcome::fails:
        return "fails";
    case Outcome::precondition_not_met:
        return "precondition_not_met";
    }
    return "?";
}

inline auto to_json(const VertexSet & set) -> Json
{
    auto members = Json::array();
    for (auto v : set)
        members.push_back(v);
    return members;
}

/// One clause of one statement on one instance. `relation` relates lhs to
/// rhs: "=", "<=", ">=". Sweep clauses report the number of cases checked
/// (lhs) and the number that agreed (rhs) with relation "=".
struct Verdict {
    std::string statement;
    std::string clause;
    std::string instance;
    std::vector<std::string> graph6;
    Outcome outcome = Outcome::holds;
    std::string relation;
    Json lhs;
    Json rhs;
    Json values;
    Json witness;
    Json counterexample;
    std::string note;
    std::optional<bool> oracle_confirmed;
};

inline auto to_json(const Verdict & v) -> Json
{
    Json out;
    out["statement"] = v.statement;
    out["clause"] = v.clause;
    out["instance"] = v.instance;
    out["graph6"] = v.graph6;
    out["outcome"] = to_string(v.outcome);
    if (v.outcome != Outcome::precondition_not_met) {
        out["relation"] = v.relation;
        out["lhs"] = v.lhs;
        out["rhs"] = v.rhs;
    }
    if (! v.values.is_null())
        out["values"] = v.values;
    if (! v.witness.is_null())
        out["witness"] = v.witness;
    if (! v.counterexample.is_null())
        out["counterexample"] = v.counterexample;
    if (v.oracle_confirmed)
        out["oracle_confirmed"] = *v.oracle_confirmed;
    if (! v.note.empty())
        out["note"] = v.note;
    return out;
}

/// Collects the verdicts of one statement on one instance.
class Recorder {
public:
    Recorder(std::string statement, const std::vector<const GraphInput *> & inputs) : statement_(std::move(statement))
    {
        for (const auto * input : inputs) {
            if (! instance_.empty())
                instance_ += ' ';
            instance_ += input->descriptor;
            graph6_.push_back(input->graph.order() <= kGraph6MaxOrder ? write_graph6(input->graph) : std::string());
        }
    }

    auto skip(std::string clause, std::string why) -> Verdict &
    {
        auto & v = add(std::move(clause));
        v.outcome = Outcome::precondition_not_met;
        v.note = std::move(why);
        return v;
    }

    auto compare(std::string clause, Json lhs, std::string_view relation, Json rhs) -> Verdict &
    {
        auto & v = add(std::move(clause));
        v.relation = relation;
        bool ok = false;
        if (relation == "=")
            ok = lhs == rhs;
        else if (relation == "<=")
            ok = lhs <= rhs;
        else if (relation == ">=")
            ok = lhs >= rhs;
        else
            throw Error("Recorder: unknown relation " + std::string(relation));
        v.lhs = std::move(lhs);
        v.rhs = std::move(rhs);
        v.outcome = ok ? Outcome::holds : Outcome::fails;
        return v;
    }

    /// Sweep over cases: holds when every checked case agreed.
    auto sweep(std::string clause, std::size_t checked, std::size_t agreed, Json first_mismatch = {}) -> Verdict &
    {
        auto & v = compare(std::move(clause), checked, "=", agreed);
        if (v.outcome == Outcome::fails)
            v.counterexample = std::move(first_mismatch);
        return v;
    }

    auto fail(std::string clause, std::string why) -> Verdict &
    {
        auto & v = add(std::move(clause));
        v.outcome = Outcome::fails;
        v.note = std::move(why);
        return v;
    }

    auto verdicts() -> std::vector<Verdict> & { return verdicts_; }
    auto instance() const -> const std::string & { return instance_; }

private:
    auto add(std::string clause) -> Verdict &
    {
        auto & v = verdicts_.emplace_back();
        v.statement = statement_;
        v.clause = std::move(clause);
        v.instance = instance_;
        v.graph6 = graph6_;
        return v;
    }

    std::string statement_;
    std::string instance_;
    std::vector<std::string> graph6_;
    std::vector<Verdict> verdicts_;
};

} // namespace gpos
