#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <degseq/engine.hpp>
#include <degseq/oracle.hpp>

using namespace degseq;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }

}  // namespace

TEST_CASE("sigma") {
    CHECK(sigma(FunctionSpec::power(2), seq({3, 3, 3, 3, 0, 0, 0})).rat() == Rational(36));
    CHECK(sigma(FunctionSpec::exp_minus_one(1), seq({0, 0, 0})).value() == 0.0L);
    // quasi-star with m = 6: m f(1) + f(m)
    CHECK(sigma(FunctionSpec::power(2), quasi_star_sequence(7, 6)).rat() == Rational(42));
}

TEST_CASE("sigma via conjugate identity") {
    CHECK(sigma_via_conjugate(FunctionSpec::power(2), seq({2, 2, 2, 0})).rat() == Rational(12));
    CHECK(sigma_via_conjugate(FunctionSpec::power(2), seq({0, 0, 0})).rat() == Rational(0));
    std::vector<FunctionSpec> specs{FunctionSpec::power(2), FunctionSpec::power(3),
                                    FunctionSpec::ratio(), FunctionSpec::exp_minus_one(0.5),
                                    FunctionSpec::neg_exponential(0.7)};
    for (int n = 2; n <= 8; ++n) {
        for (long m = 0; m <= max_edges(n); ++m) {
            for (const DegreeSequence& d : enumerate_graphical_sequences(n, m)) {
                for (const auto& f : specs) {
                    Scalar direct = sigma(f, d);
                    Scalar conj = sigma_via_conjugate(f, d);
                    if (f.exact_path()) {
                        CHECK(compare(direct, conj) == Cmp::Equal);
                    } else {
                        Cmp c = compare(direct, conj);
                        CHECK((c == Cmp::Equal || c == Cmp::NearTie));
                    }
                }
            }
        }
    }
}

TEST_CASE("chebyshev bound values") {
    CHECK(chebyshev_bound(FunctionSpec::power(2), 6, 6).rat() == Rational(42));
    CHECK(chebyshev_bound(FunctionSpec::power(2), 3, 2).rat() == Rational(12));
    CHECK(chebyshev_bound(FunctionSpec::power(3), 5, 3).rat() == Rational(82));
    CHECK_THROWS_AS(chebyshev_bound(FunctionSpec::power(2), 1, 1), std::domain_error);
    CHECK_THROWS_AS(chebyshev_bound(FunctionSpec::power(2), 1, 2), std::domain_error);
}

TEST_CASE("bound dominates sigma for threshold graphs, d1 >= 2") {
    // every threshold graph in G(n,5) with max degree 3 stays below 82 for cubes
    for (const Graph& g : enumerate_threshold_graphs(7, 5)) {
        DegreeSequence d = degree_sequence(g);
        if (d.max_degree() != 3) continue;
        CHECK(cmp_le(compare(sigma(FunctionSpec::power(3), d),
                             chebyshev_bound(FunctionSpec::power(3), 5, 3))));
    }
}

TEST_CASE("chebyshev inequality check") {
    auto v = chebyshev_inequality_check({Scalar(1), Scalar(2)}, {Scalar(2), Scalar(1)});
    CHECK(v.holds);
    CHECK_FALSE(v.equality);  // 2*4 = 8 < 9
    CHECK(v.lhs.rat() == Rational(8));
    CHECK(v.rhs.rat() == Rational(9));

    auto c = chebyshev_inequality_check({Scalar(5), Scalar(5), Scalar(5)},
                                        {Scalar(9), Scalar(4), Scalar(1)});
    CHECK(c.holds);
    CHECK(c.equality);
    CHECK(c.a_constant);

    CHECK_THROWS_AS(chebyshev_inequality_check({Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}),
                    std::domain_error);
    CHECK_THROWS_AS(chebyshev_inequality_check({Scalar(1)}, {}), std::domain_error);
}

TEST_CASE("chebyshev property on seeded random monotone pairs") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> len(1, 10);
    std::uniform_int_distribution<int> step(0, 6);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = len(rng);
        std::vector<Scalar> a, b;
        long long av = step(rng), bv = 40 + step(rng);
        bool a_const = true, b_const = true;
        for (int i = 0; i < n; ++i) {
            a.emplace_back(av);
            b.emplace_back(bv);
            int da = step(rng), db = step(rng);
            if (i + 1 < n) {  // only realized increments break constancy
                if (da > 0) a_const = false;
                if (db > 0) b_const = false;
            }
            av += da;
            bv -= db;
        }
        auto v = chebyshev_inequality_check(a, b);
        CHECK(v.holds);
        CHECK(v.equality == (a_const || b_const));
    }
}

TEST_CASE("local search reaches a threshold fixpoint") {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto res = local_search_to_threshold(p4, FunctionSpec::power(2));
    CHECK(is_threshold(res.graph).is_threshold);
    CHECK(res.sigma_value.rat() == Rational(12));
    CHECK_FALSE(res.trace.empty());
    // sigma strictly increases along the trace
    Scalar prev = sigma(FunctionSpec::power(2), degree_sequence(p4));
    for (const auto& step : res.trace) {
        CHECK(compare(prev, step.sigma_after) == Cmp::Less);
        prev = step.sigma_after;
    }

    auto already = local_search_to_threshold(make_quasi_star(5, 4), FunctionSpec::power(2));
    CHECK(already.trace.empty());
    CHECK(degree_sequence(already.graph) == quasi_star_sequence(5, 4));

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto res_c4 = local_search_to_threshold(c4, FunctionSpec::power(2));
    CHECK(is_threshold(res_c4.graph).is_threshold);
    // sigma_2(C4) = 16; the exchange strictly improves (true max is 18)
    CHECK(compare(Scalar(16), res_c4.sigma_value) == Cmp::Less);
    CHECK(res_c4.sigma_value.rat() == Rational(18));
}

TEST_CASE("minimization plan") {
    auto plan = plan_minimization(5, 7, FunctionSpec::power(0.5));
    CHECK(plan.ell == 5);
    CHECK(plan.nu == 4);
    CHECK(plan.m_bar == 3);
    CHECK(plan.hat_spec.has_value());

    auto complete = plan_minimization(6, 15, FunctionSpec::power(0.5));
    CHECK(complete.ell == 6);
    CHECK(complete.m_bar == 0);

    auto tiny = plan_minimization(9, 1, FunctionSpec::power(0.5));
    CHECK(tiny.ell == 2);
    CHECK(tiny.nu == 1);
    CHECK_FALSE(tiny.hat_spec.has_value());

    // (l-1 choose 2) < m <= (l choose 2) and m_bar <= l-1
    for (long m = 1; m <= max_edges(8); ++m) {
        auto p = plan_minimization(8, m, FunctionSpec::ratio());
        CHECK((p.ell - 1) * (p.ell - 2) / 2 < m);
        CHECK(m <= p.ell * (p.ell - 1) / 2);
        CHECK(p.m_bar <= p.ell - 1);
    }
}

TEST_CASE("minimize via complement") {
    auto sqrt_case = minimize_via_complement(6, 3, FunctionSpec::power(0.5));
    REQUIRE(sqrt_case.optimal_sequences.size() == 1);
    CHECK(sqrt_case.optimal_sequences.front() == seq({2, 2, 2, 0, 0, 0}));
    CHECK(sqrt_case.optimum.value() == doctest::Approx(3.0 * std::sqrt(2.0)));
    CHECK(3.0 * std::sqrt(2.0) < 3.0 + std::sqrt(3.0));  // strictly below the star

    auto ratio_case = minimize_via_complement(5, 7, FunctionSpec::ratio());
    REQUIRE(ratio_case.optimal_sequences.size() == 1);
    CHECK(ratio_case.optimal_sequences.front() == quasi_complete_sequence(5, 7));
    CHECK(ratio_case.optimum.rat() == Rational(71, 20));  // exact on the rational path
    CHECK(ratio_case.unique);

    auto complete = minimize_via_complement(4, 6, FunctionSpec::power(0.5));
    REQUIRE(complete.optimal_sequences.size() == 1);
    CHECK(complete.optimal_sequences.front() == seq({3, 3, 3, 3}));
}

TEST_CASE("duality identity over all sequences of the reduced instance") {
    // l g(nu) - sigma_hat(complement) = sigma_g(d), exact for the ratio path
    FunctionSpec g = FunctionSpec::ratio();
    const int ell = 5;
    const long m = 7;
    auto plan = plan_minimization(ell, m, g);
    REQUIRE(plan.hat_spec.has_value());
    Scalar total = Scalar(plan.ell) * eval(g, plan.nu);
    for (const DegreeSequence& d : enumerate_graphical_sequences(ell, m)) {
        std::vector<int> comp;
        for (int v : d.values()) comp.push_back(static_cast<int>(plan.nu) - v);
        Scalar lhs = total - sigma(*plan.hat_spec, DegreeSequence(comp));
        CHECK(compare(lhs, sigma(g, d)) == Cmp::Equal);
    }
    // float path: within tau
    FunctionSpec gs = FunctionSpec::power(0.5);
    auto plan_s = plan_minimization(ell, m, gs);
    Scalar total_s = Scalar(plan_s.ell) * eval(gs, plan_s.nu);
    for (const DegreeSequence& d : enumerate_graphical_sequences(ell, m)) {
        std::vector<int> comp;
        for (int v : d.values()) comp.push_back(static_cast<int>(plan_s.nu) - v);
        Scalar lhs = total_s - sigma(*plan_s.hat_spec, DegreeSequence(comp));
        CHECK(cmp_le(compare(lhs, sigma(gs, d))));
        CHECK(cmp_ge(compare(lhs, sigma(gs, d))));
    }
}
