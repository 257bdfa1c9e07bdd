#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <degseq/graph.hpp>
#include <degseq/oracle.hpp>

#include "test_util.hpp"

using namespace degseq;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("quasi decomposition is the unique clique split") {
    auto [q, r] = quasi_decompose(6);
    CHECK(q == 4);
    CHECK(r == 0);
    auto [q2, r2] = quasi_decompose(4);
    CHECK(q2 == 3);
    CHECK(r2 == 1);
    auto [q0, r0] = quasi_decompose(0);
    CHECK(q0 == 1);
    CHECK(r0 == 0);
    for (long m = 0; m <= 100; ++m) {
        auto [qq, rr] = quasi_decompose(m);
        CHECK(m == qq * (qq - 1) / 2 + rr);
        CHECK(rr >= 0);
        CHECK(rr <= qq - 1);
    }
}

TEST_CASE("quasi-complete construction") {
    CHECK(sorted_degrees(make_quasi_complete(7, 6)) == std::vector<int>{3, 3, 3, 3, 0, 0, 0});
    CHECK(sorted_degrees(make_quasi_complete(5, 4)) == std::vector<int>{3, 2, 2, 1, 0});
    CHECK(sorted_degrees(make_quasi_complete(4, 0)) == std::vector<int>{0, 0, 0, 0});
    CHECK(make_quasi_complete(4, 6).edge_count() == 6);
    CHECK_THROWS_AS(make_quasi_complete(4, 7), std::domain_error);
    CHECK_THROWS_AS(make_quasi_complete(4, -1), std::domain_error);
}

TEST_CASE("quasi-star construction") {
    CHECK(sorted_degrees(make_quasi_star(7, 6)) == std::vector<int>{6, 1, 1, 1, 1, 1, 1});
    CHECK(sorted_degrees(make_quasi_star(4, 6)) == std::vector<int>{3, 3, 3, 3});
    CHECK(sorted_degrees(make_quasi_star(5, 4)) == std::vector<int>{4, 1, 1, 1, 1});
    CHECK_THROWS_AS(make_quasi_star(4, 7), std::domain_error);
}

TEST_CASE("complement involution and duality with quasi-star") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(complement(k4).edge_count() == 0);
    Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(complement(complement(g)) == g);
    CHECK(degree_sequence(complement(make_quasi_complete(5, 3))) == quasi_star_sequence(5, 7));
}

TEST_CASE("degree sequence and conjugate by counting") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    DegreeSequence d = degree_sequence(star);
    CHECK(d.values() == std::vector<int>{3, 1, 1, 1});
    CHECK(d.conjugate() == std::vector<int>{4, 1, 1, 0});
    Graph empty3(3);
    CHECK(degree_sequence(empty3).values() == std::vector<int>{0, 0, 0});
    CHECK(degree_sequence(empty3).conjugate() == std::vector<int>{0, 0, 0});
    Graph k3_iso(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(degree_sequence(k3_iso).values() == std::vector<int>{2, 2, 2, 0});
    CHECK(degree_sequence(k3_iso).conjugate() == std::vector<int>{3, 3, 0, 0});
    CHECK(degree_sequence(k3_iso).sum() == 6);
}

TEST_CASE("quasi-star conjugate follows the counting rule (n-m zeros)") {
    // the conjugate must sum to 2m, which fixes the zero count at n-m
    for (int n = 4; n <= 9; ++n) {
        for (long m = 1; m <= n - 1; ++m) {
            DegreeSequence d = quasi_star_sequence(n, m);
            const auto& conj = d.conjugate();
            CHECK(conj.front() == m + 1);
            long sum = 0;
            int zeros = 0;
            for (int v : conj) {
                sum += v;
                if (v == 0) ++zeros;
            }
            CHECK(sum == 2 * m);
            CHECK(zeros == n - m);
        }
    }
}

TEST_CASE("threshold verdict with violating triple") {
    ThresholdVerdict p4 = is_threshold(path4());
    CHECK_FALSE(p4.is_threshold);
    REQUIRE(p4.violation.has_value());
    auto [i, j, k] = *p4.violation;
    Graph g = path4();
    auto deg = g.degrees();
    CHECK(deg[i] >= deg[j]);
    CHECK(g.adjacent(j, k));
    CHECK_FALSE(g.adjacent(i, k));
    CHECK(i != k);
    // deterministic: same triple every time
    auto again = is_threshold(path4());
    CHECK(*again.violation == *p4.violation);

    Graph star_iso(6, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_threshold(star_iso).is_threshold);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(is_threshold(c4).is_threshold);
}

TEST_CASE("chain exchange moves degree mass upward") {
    // spec's worked triple on P4 (1-based (2,3,4)): degrees become (3,1,1,1)
    Graph g = chain_exchange(path4(), 1, 2, 3);
    CHECK(sorted_degrees(g) == std::vector<int>{3, 1, 1, 1});
    CHECK(g.edge_count() == path4().edge_count());

    CHECK_THROWS_AS(chain_exchange(path4(), 0, 1, 2), std::domain_error);  // d_0 < d_1
    CHECK_THROWS_AS(chain_exchange(path4(), 1, 1, 3), std::domain_error);  // not distinct
    CHECK_THROWS_AS(chain_exchange(path4(), 2, 1, 2), std::domain_error);  // i == k
}

TEST_CASE("creation sequences") {
    CHECK(sorted_degrees(threshold_from_creation_sequence("idd")) == std::vector<int>{2, 2, 2});
    CHECK(threshold_from_creation_sequence("iii").edge_count() == 0);
    CHECK(sorted_degrees(threshold_from_creation_sequence("iid")) == std::vector<int>{2, 1, 1});
    // first symbol only starts the graph
    CHECK(threshold_from_creation_sequence("did") == threshold_from_creation_sequence("iid"));
    CHECK_THROWS_AS(threshold_from_creation_sequence(""), std::domain_error);
    CHECK_THROWS_AS(threshold_from_creation_sequence("ixd"), std::domain_error);
}

TEST_CASE("creation output is always threshold and conversely") {
    for (int n = 2; n <= 8; ++n) {
        std::set<std::vector<int>> from_creation;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::string bits(n, 'i');
            for (int t = 1; t < n; ++t)
                if ((mask >> (t - 1)) & 1u) bits[t] = 'd';
            Graph g = threshold_from_creation_sequence(bits);
            CHECK(is_threshold(g).is_threshold);
            from_creation.insert(degree_sequence(g).values());
        }
        // every enumerated threshold degree sequence arises from some creation sequence
        for (long m = 0; m <= max_edges(n); ++m)
            for (const Graph& g : enumerate_threshold_graphs(n, m))
                CHECK(from_creation.count(degree_sequence(g).values()) == 1);
    }
}

TEST_CASE("erdos-gallai examples") {
    CHECK(is_graphical({3, 1, 1, 1}));
    CHECK_FALSE(is_graphical({3, 3, 1, 1}));
    CHECK(is_graphical({0, 0, 0, 0}));
    CHECK_FALSE(is_graphical({1}));
    CHECK_FALSE(is_graphical({2, 1}));  // odd sum
    CHECK_THROWS_AS(is_graphical({-1, 1}), std::domain_error);
}

TEST_CASE("erdos-gallai agrees with exhaustive enumeration, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        auto truth = testutil::degree_sets_by_edges(n);
        std::set<std::vector<int>> realizable;
        for (const auto& [m, seqs] : truth) realizable.insert(seqs.begin(), seqs.end());
        // every candidate sequence of length n with entries <= n-1
        std::vector<int> cur(n, 0);
        auto rec = [&](auto&& self, int idx, int cap) -> void {
            if (idx == n) {
                bool expected = realizable.count(cur) > 0;
                CHECK(is_graphical(cur) == expected);
                return;
            }
            for (int v = 0; v <= cap; ++v) {
                cur[idx] = v;
                self(self, idx + 1, v);
            }
        };
        rec(rec, 0, n - 1);
    }
}

TEST_CASE("havel-hakimi realization") {
    for (int n = 2; n <= 7; ++n) {
        for (long m = 0; m <= max_edges(n); ++m) {
            for (const DegreeSequence& d : enumerate_graphical_sequences(n, m)) {
                auto g = realize_sequence(d.values());
                REQUIRE(g.has_value());
                CHECK(degree_sequence(*g) == d);
            }
        }
    }
    CHECK_FALSE(realize_sequence({3, 3, 1, 1}).has_value());
}

TEST_CASE("threshold structure properties over all threshold graphs, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        for (long m = 0; m <= max_edges(n); ++m) {
            for (const Graph& g : enumerate_threshold_graphs(n, m)) {
                DegreeSequence d = degree_sequence(g);
                const auto deg = g.degrees();
                const int delta_max = d.max_degree();
                const int delta_min = d.min_degree();

                // (i) max-degree vertices are adjacent to every non-isolated vertex
                for (int u = 0; u < n; ++u) {
                    if (deg[u] != delta_max || delta_max == 0) continue;
                    for (int v = 0; v < n; ++v)
                        if (v != u && deg[v] > 0) CHECK(g.adjacent(u, v));
                }
                // consequence used in the max-degree bound: d*_1 = d_1 + 1
                if (delta_max >= 1) CHECK(d.conjugate()[0] == delta_max + 1);

                // (ii) positive minimum degree forces a dominating vertex
                if (delta_min > 0) {
                    CHECK(delta_max == n - 1);
                    for (int u = 0; u < n; ++u) {
                        if (deg[u] != delta_min) continue;
                        for (int v = 0; v < n; ++v)
                            if (v != u && g.adjacent(u, v)) CHECK(deg[v] == n - 1);
                    }
                }

                // (iii) d*_2 > 1 forces a triangle and d*_2 >= 3
                if (n >= 2 && d.conjugate()[1] > 1) {
                    CHECK(d.conjugate()[1] >= 3);
                    bool triangle = false;
                    for (int a = 0; a < n && !triangle; ++a)
                        for (int b = a + 1; b < n && !triangle; ++b)
                            for (int c = b + 1; c < n && !triangle; ++c)
                                triangle = g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
                    CHECK(triangle);
                }
            }
        }
    }
}

TEST_CASE("degree sum equals conjugate sum equals 2m") {
    for (int n = 2; n <= 7; ++n) {
        for (long m = 0; m <= max_edges(n); ++m) {
            for (const Graph& g : enumerate_threshold_graphs(n, m)) {
                DegreeSequence d = degree_sequence(g);
                long conj_sum = 0;
                for (int v : d.conjugate()) conj_sum += v;
                CHECK(d.sum() == 2 * m);
                CHECK(conj_sum == 2 * m);
            }
        }
    }
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(Graph(65), std::domain_error);
    CHECK_THROWS_AS(Graph(0), std::domain_error);
    Graph g(64);
    CHECK(g.vertex_count() == 64);
}
