// One PASS/FAIL line per acceptance criterion.
//
// Exit status is 0 when the failing criteria are exactly kKnownFailures, so a
// new failure or an unexpected pass both break the build.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <gpos/gpos.hpp>

using namespace gpos;

namespace {

/// gp_d(C7^+) is 1, not 3: criterion 5 checks it directly and criterion 11
/// runs S17 on its built-in instances.
const std::set<int> kKnownFailures = {5, 11};

struct Tally {
    std::size_t holds = 0, fails = 0, skipped = 0;
    std::map<std::string, std::size_t> holds_by_clause;
    std::vector<std::string> failures;
};

struct RoundTrip {
    std::size_t checked = 0, broken = 0;

    auto check(const std::string & text) -> void
    {
        if (text.empty())
            return;
        ++checked;
        if (write_graph6(parse_graph6(text)) != text)
            ++broken;
    }

    auto check(const Graph & g) -> void
    {
        if (g.order() == 0 || g.order() > kGraph6MaxOrder)
            return;
        ++checked;
        if (! (parse_graph6(write_graph6(g)) == g))
            ++broken;
    }
};

RoundTrip round_trip;

auto run(std::string_view ids, const std::optional<Corpus> & corpus, Engine engine = Engine::characterization)
    -> Tally
{
    SuiteOptions options;
    options.engine.engine = engine;
    Tally tally;
    run_suite(select_statements(ids), corpus, options, [&](const Verdict & v) {
        for (const auto & text : v.graph6)
            round_trip.check(text);
        switch (v.outcome) {
        case Outcome::holds:
            ++tally.holds;
            ++tally.holds_by_clause[v.statement + ":" + v.clause];
            break;
        case Outcome::fails:
            ++tally.fails;
            tally.failures.push_back(v.statement + "/" + v.clause + " on " + v.instance);
            break;
        case Outcome::precondition_not_met:
            ++tally.skipped;
            break;
        }
    });
    return tally;
}

auto describe(const Tally & t) -> std::string
{
    std::ostringstream out;
    out << t.holds << " holds, " << t.fails << " fails, " << t.skipped << " precondition_not_met";
    for (std::size_t i = 0; i < t.failures.size() && i < 3; ++i)
        out << "; fails: " << t.failures[i];
    return out.str();
}

struct CriterionResult {
    bool pass;
    std::string detail;
};

auto clauses_covered(const Tally & t, std::initializer_list<const char *> keys, std::string & missing) -> bool
{
    for (auto key : keys)
        if (! t.holds_by_clause.contains(key))
            missing += std::string(missing.empty() ? "" : ", ") + key;
    return missing.empty();
}

auto pair_corpus() -> Corpus { return load_corpus("pairs:exhaustive:2-4xexhaustive:2-4"); }

auto criterion1() -> CriterionResult
{
    auto t = run("S1,S2,S3,S4", load_corpus("exhaustive:1-6"));
    std::string missing;
    bool covered = clauses_covered(t, {"S1:value", "S1:subsets", "S2:value", "S2:pairwise", "S3:iff", "S4:value"},
                                   missing);
    return {t.fails == 0 && covered, describe(t) + (covered ? "" : "; no holds for " + missing)};
}

auto criterion2() -> CriterionResult
{
    auto t = run("S11", pair_corpus());
    return {t.fails == 0 && t.holds > 0, describe(t)};
}

auto criterion3() -> CriterionResult
{
    auto t = run("S12,S13", pair_corpus());
    std::string missing;
    bool covered = clauses_covered(t, {"S12:lower", "S12:upper", "S13:coincide", "S13:value"}, missing);
    return {t.fails == 0 && covered, describe(t) + (covered ? "" : "; no holds for " + missing)};
}

auto criterion4() -> CriterionResult
{
    auto p = strong_product(cycle_graph(5), cycle_graph(5));
    Analysis a(p.graph(), {});
    auto omega = max_clique(a.sr().full).size;
    auto oracle = a.oracle_position(PositionKind::outer).size;
    round_trip.check(p.graph());
    std::ostringstream out;
    out << "omega(SR) = " << omega << ", oracle outer = " << oracle << " on " << p.graph().order() << " vertices";
    return {omega == 5 && oracle == 5 && p.graph().order() == 25, out.str()};
}

auto criterion5() -> CriterionResult
{
    // Connected pairs with product order <= 16.
    auto s16 = run("S16", load_corpus("pairs:exhaustive:1-4xexhaustive:1-4"), Engine::oracle);
    auto s18 = run("S18", load_corpus("exhaustive:1-5"));
    std::ostringstream out;
    out << "S16 " << describe(s16) << " | S18 " << describe(s18);
    bool values_ok = true;
    for (std::size_t n : {5, 7}) {
        auto g = cycle_plus(n);
        round_trip.check(g);
        auto d = gp_dual(g).size;
        auto oracle = gp_dual(g, Engine::oracle).size;
        out << " | gp_d(C" << n << "^+) = " << d << " (oracle " << oracle << ", expected 3)";
        values_ok = values_ok && d == 3 && oracle == 3;
    }
    return {s16.fails == 0 && s18.fails == 0 && s16.holds > 0 && s18.holds > 0 && values_ok, out.str()};
}

auto criterion6() -> CriterionResult
{
    auto t = run("S9,S10,S19,S20", pair_corpus());
    std::string missing;
    bool covered = clauses_covered(t, {"S9:sets", "S10:value", "S19:sets", "S20:value"}, missing);
    return {t.fails == 0 && covered, describe(t)};
}

auto criterion7() -> CriterionResult
{
    auto singles = run("S21,S24,S25", load_corpus("exhaustive:1-6"));
    auto corpus = pair_corpus();
    for (auto & p : load_corpus("pairs:family:cycle:5,cycle:6,path:5,star:4,cycle_plus:5,subdivided_star:2,1"
                                "xfamily:cycle:4,cycle:5,cycle:6,path:4,path:5,star:3")
                        .pairs)
        corpus.pairs.push_back(std::move(p));
    auto pairs = run("S23,S26", corpus);
    std::string missing;
    bool covered =
        clauses_covered(singles, {"S21:i", "S21:ii", "S21:iii", "S24:m=2", "S24:m=3", "S25:i,m=2", "S25:ii,m=3"},
                        missing) &&
        clauses_covered(pairs, {"S23:i", "S23:ii", "S23:iii", "S26:i", "S26:ii"}, missing);
    return {singles.fails == 0 && pairs.fails == 0 && covered,
            "singles " + describe(singles) + " | pairs " + describe(pairs) +
                (covered ? "" : "; no holds for " + missing)};
}

auto criterion8() -> CriterionResult
{
    auto ii = run("S27", load_corpus("exhaustive:1-5"));
    auto i = run("S27", load_corpus("pairs:family:cycle:4,cycle:5xfamily:cycle:4,cycle:5"));
    std::string missing;
    bool covered = clauses_covered(ii, {"S27:ii,n=1", "S27:ii,n=2", "S27:ii,n=3"}, missing) &&
                   i.holds_by_clause["S27:i"] == 4;
    return {ii.fails == 0 && i.fails == 0 && covered, "(ii) " + describe(ii) + " | (i) " + describe(i)};
}

auto criterion9() -> CriterionResult
{
    auto s8 = run("S8", std::nullopt);
    auto s7 = run("S7", load_corpus("exhaustive:1-6"));
    auto s7_families = run("S7", load_corpus("family:subdivided_star:2,1,subdivided_star:3,1,subdivided_star:3,2,"
                                             "clique_paths:2,1,clique_paths:3,1,clique_paths:3,2,cycle:9,cycle_plus:7"));
    return {s8.fails == 0 && s8.holds == 24 && s7.fails == 0 && s7_families.fails == 0,
            "S8 " + describe(s8) + " | S7 " + describe(s7) + " | S7 families " + describe(s7_families)};
}

auto criterion10() -> CriterionResult
{
    for (const auto & [g, h] : pair_corpus().pairs)
        for (auto kind : {ProductKind::strong, ProductKind::lexicographic})
            round_trip.check(product(kind, g.graph, h.graph).graph());
    std::ostringstream out;
    out << round_trip.checked << " graph6 strings checked, " << round_trip.broken << " mismatches";
    return {round_trip.broken == 0 && round_trip.checked > 0, out.str()};
}

auto criterion11() -> CriterionResult
{
    auto start = std::chrono::steady_clock::now();
    auto t = run("all", load_corpus("exhaustive:5"));
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << elapsed.count() << " s; " << describe(t);
    return {t.fails == 0 && elapsed.count() <= 60.0, out.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<int, std::function<CriterionResult()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},   {5, criterion5},  {6, criterion6},
        {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11}};
    std::set<int> failed;
    for (const auto & [number, check] : criteria) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult result;
        try {
            result = check();
        }
        catch (const std::exception & e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (! result.pass)
            failed.insert(number);
        std::cout << (result.pass ? "PASS" : "FAIL") << " criterion " << number << " [" << std::fixed
                  << std::setprecision(2) << elapsed.count() << " s] " << result.detail << std::endl;
    }
    std::cout << (failed == kKnownFailures ? "failing criteria match the documented set"
                                           : "failing criteria differ from the documented set")
              << std::endl;
    return failed == kKnownFailures ? 0 : 1;
}
