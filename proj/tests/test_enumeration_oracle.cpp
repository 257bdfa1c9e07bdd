#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include <degseq/engine.hpp>
#include <degseq/oracle.hpp>

#include "test_util.hpp"

using namespace degseq;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }

std::set<std::vector<int>> values_of(const std::vector<DegreeSequence>& seqs) {
    std::set<std::vector<int>> out;
    for (const auto& d : seqs) out.insert(d.values());
    return out;
}

}  // namespace

TEST_CASE("threshold enumeration") {
    auto t43 = enumerate_threshold_graphs(4, 3);
    CHECK(t43.size() == 2);
    std::set<std::vector<int>> found;
    for (const auto& g : t43) {
        CHECK(g.edge_count() == 3);
        CHECK(is_threshold(g).is_threshold);
        found.insert(degree_sequence(g).values());
    }
    CHECK(found == std::set<std::vector<int>>{{3, 1, 1, 1}, {2, 2, 2, 0}});

    CHECK(enumerate_threshold_graphs(3, 2).size() == 1);

    std::size_t total = 0;
    for (long m = 0; m <= max_edges(4); ++m) total += enumerate_threshold_graphs(4, m).size();
    CHECK(total == 8);  // 2^{n-1} classes over all m
}

TEST_CASE("graphical sequence enumeration") {
    auto s43 = values_of(enumerate_graphical_sequences(4, 3));
    CHECK(s43 == std::set<std::vector<int>>{{3, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2, 0}});
    auto empty = enumerate_graphical_sequences(5, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty.front() == seq({0, 0, 0, 0, 0}));
    auto complete = enumerate_graphical_sequences(5, 10);
    REQUIRE(complete.size() == 1);
    CHECK(complete.front() == seq({4, 4, 4, 4, 4}));
}

TEST_CASE("graphical sequences match labeled enumeration, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        auto truth = testutil::degree_sets_by_edges(n);
        for (long m = 0; m <= max_edges(n); ++m) {
            auto mine = values_of(enumerate_graphical_sequences(n, m));
            std::set<std::vector<int>> expected(truth[m].begin(), truth[m].end());
            CHECK(mine == expected);
        }
    }
}

TEST_CASE("every threshold degree sequence is graphical") {
    for (int n = 2; n <= 8; ++n) {
        for (long m = 0; m <= max_edges(n); ++m) {
            auto graphical = values_of(enumerate_graphical_sequences(n, m));
            for (const auto& g : enumerate_threshold_graphs(n, m))
                CHECK(graphical.count(degree_sequence(g).values()) == 1);
        }
    }
}

TEST_CASE("find_extremal: the predicted tie at m = 3 for squares") {
    auto rep = find_extremal(FunctionSpec::power(2), 6, 3, Mode::Max, OracleKind::AllGraphical);
    CHECK(rep.optimum.rat() == Rational(12));
    REQUIRE(rep.optimal_sequences.size() == 2);
    CHECK(rep.optimal_sequences[0] == seq({3, 1, 1, 1, 0, 0}));
    CHECK(rep.optimal_sequences[1] == seq({2, 2, 2, 0, 0, 0}));
    CHECK_FALSE(rep.unique);
    CHECK(rep.near_ties.empty());
}

TEST_CASE("find_extremal: cubes break the tie") {
    auto rep = find_extremal(FunctionSpec::power(3), 6, 3, Mode::Max, OracleKind::AllGraphical);
    CHECK(rep.unique);
    REQUIRE(rep.optimal_sequences.size() == 1);
    CHECK(rep.optimal_sequences.front() == seq({3, 1, 1, 1, 0, 0}));
}

TEST_CASE("find_extremal: sqrt minimization picks quasi-complete") {
    auto rep = find_extremal(FunctionSpec::power(0.5), 5, 4, Mode::Min, OracleKind::ThresholdOnly);
    CHECK(rep.unique);
    REQUIRE(rep.optimal_sequences.size() == 1);
    CHECK(rep.optimal_sequences.front() == quasi_complete_sequence(5, 4));
}

TEST_CASE("oracle agreement between threshold-only and all-graphical") {
    std::vector<std::pair<FunctionSpec, Mode>> cases{
        {FunctionSpec::power(2), Mode::Max},
        {FunctionSpec::exp_minus_one(0.5), Mode::Max},
        {FunctionSpec::power(0.5), Mode::Min},
        {FunctionSpec::neg_exponential(0.7), Mode::Min},
        {FunctionSpec::ratio(), Mode::Min},
    };
    for (int n = 4; n <= 7; ++n) {
        for (long m = 0; m <= max_edges(n); ++m) {
            for (const auto& [f, mode] : cases) {
                auto thr = find_extremal(f, n, m, mode, OracleKind::ThresholdOnly);
                auto all = find_extremal(f, n, m, mode, OracleKind::AllGraphical);
                Cmp c = compare(thr.optimum, all.optimum);
                CHECK((c == Cmp::Equal || c == Cmp::NearTie));
                CHECK(thr.optimal_sequences == all.optimal_sequences);
            }
        }
    }
}

TEST_CASE("verify unique quasi-star") {
    CHECK(verify_unique_quasi_star(FunctionSpec::exp_minus_one(1), 8, 5).verdict == Verdict::Pass);
    for (int n = 4; n <= 9; ++n) {
        auto tie = verify_unique_quasi_star(FunctionSpec::power(2), n, 3);
        CHECK(tie.verdict == Verdict::Pass);
        CHECK(tie.report.optimal_sequences.size() == 2);
    }
    // the sparse counterexample regime: beta = 1.5 loses to the clique
    auto fail = verify_unique_quasi_star(FunctionSpec::power(1.5), 7, 6);
    CHECK(fail.verdict == Verdict::Fail);
    REQUIRE(fail.report.optimal_sequences.size() == 1);
    CHECK(fail.report.optimal_sequences.front() == seq({3, 3, 3, 3, 0, 0, 0}));
    CHECK(4.0 * std::pow(3.0, 1.5) > 6.0 + std::pow(6.0, 1.5));
    CHECK_THROWS_AS(verify_unique_quasi_star(FunctionSpec::power(2), 4, 4), std::domain_error);
}

TEST_CASE("verify unique quasi-complete") {
    for (long m = 0; m <= max_edges(6); ++m)
        CHECK(verify_unique_quasi_complete(FunctionSpec::power(0.5), 6, m).verdict == Verdict::Pass);
    for (long m = 0; m <= max_edges(5); ++m)
        CHECK(verify_unique_quasi_complete(FunctionSpec::neg_exponential(0.7), 5, m).verdict ==
              Verdict::Pass);
    CHECK(verify_unique_quasi_complete(FunctionSpec::ratio(), 6, 7).verdict == Verdict::Pass);
}

TEST_CASE("float near-ties are surfaced, not silently resolved") {
    // For g = 1-e^{-lambda x} with lambda = 1e-9, the two sequences of
    // G(4,2) differ by ~lambda^2 relative to a ~4*lambda optimum, which is
    // inside the tau band.
    FunctionSpec g = FunctionSpec::neg_exponential(1e-9);
    auto rep = find_extremal(g, 4, 2, Mode::Min, OracleKind::AllGraphical);
    CHECK_FALSE(rep.unique);
    CHECK(rep.optimal_sequences.size() == 1);
    REQUIRE(rep.near_ties.size() == 1);
    CHECK(rep.near_ties.front().sequence == seq({1, 1, 1, 1}));

    auto lemma = verify_isolated_vertex_lemma(g, 4, 2);
    CHECK(lemma.verdict == Verdict::Inconclusive);
}

TEST_CASE("tie predicate inside the tau band is inconclusive") {
    // f(3) - 3(f(2)-f(1)) = 1e-8 * 0.2728... which is within tau of zero
    // relative to f(3) ~ 9, so the m=3 verdict cannot be certified
    FunctionSpec f = FunctionSpec::conical(
        {{Scalar(1), FunctionSpec::power(2)}, {Scalar::approx(1e-8L), FunctionSpec::exp_minus_one(0.5)}});
    auto r = verify_unique_quasi_star(f, 6, 3);
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("isolated-vertex lemma") {
    CHECK(verify_isolated_vertex_lemma(FunctionSpec::power(0.5), 6, 9).verdict == Verdict::Pass);
    CHECK(verify_isolated_vertex_lemma(FunctionSpec::ratio(), 5, 6).verdict == Verdict::Pass);
    CHECK(verify_isolated_vertex_lemma(FunctionSpec::ratio(), 5, 7).verdict == Verdict::Skipped);
}
