#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace degseq {

// One adjacency row per vertex, one bit per neighbor.
inline constexpr int kMaxVertices = 64;

// Non-increasing degree sequence together with its conjugate
// d*_i = #{ j : d_j >= i }, i = 1..n. The conjugate always has n entries;
// entries beyond d_1 are zero.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);

    int size() const { return static_cast<int>(d_.size()); }
    const std::vector<int>& values() const { return d_; }
    const std::vector<int>& conjugate() const { return conj_; }
    long sum() const { return sum_; }          // = 2m
    long edge_count() const { return sum_ / 2; }
    int max_degree() const { return d_.empty() ? 0 : d_.front(); }
    int min_degree() const { return d_.empty() ? 0 : d_.back(); }

    bool operator==(const DegreeSequence& o) const { return d_ == o.d_; }
    bool operator<(const DegreeSequence& o) const { return d_ < o.d_; }

    std::string str() const;  // "3 1 1 1"

private:
    std::vector<int> d_;
    std::vector<int> conj_;
    long sum_ = 0;
};

// Labeled simple graph on vertices 0..n-1 (printed 1-based by the CLI).
// Library operations treat graphs as values: they take const& and return
// new graphs.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }
    bool adjacent(int i, int j) const { return (rows_[i] >> j) & 1u; }
    std::uint64_t neighbors(int i) const { return rows_[i]; }
    int degree(int i) const;
    std::vector<int> degrees() const;  // labeled, by vertex index

    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::uint64_t> rows_;
    void check_pair(int i, int j) const;
};

// m = q(q-1)/2 + r with 0 <= r <= q-1, unique.
struct QuasiDecomposition {
    long q = 0;
    long r = 0;
};
QuasiDecomposition quasi_decompose(long m);

long max_edges(int n);

// Clique on q vertices, one extra vertex joined to r of them, rest isolated.
Graph make_quasi_complete(int n, long m);
// Complement of make_quasi_complete(n, C(n,2) - m); a star plus isolated
// vertices when m <= n-1.
Graph make_quasi_star(int n, long m);
Graph complement(const Graph& g);

DegreeSequence degree_sequence(const Graph& g);
DegreeSequence quasi_complete_sequence(int n, long m);
DegreeSequence quasi_star_sequence(int n, long m);

struct ThresholdVerdict {
    bool is_threshold = true;
    // violating (i,j,k) with d_i >= d_j, j~k, i!~k; lexicographically first
    std::optional<std::array<int, 3>> violation;
};
ThresholdVerdict is_threshold(const Graph& g);

// Edge set becomes E(g) symmetric-difference {ik, jk}; requires d_i >= d_j,
// j~k, i!~k, all three distinct.
Graph chain_exchange(const Graph& g, int i, int j, int k);

// One vertex per character: 'i' added isolated, 'd' adjacent to all previous.
// The first character only starts the graph, its letter is ignored.
Graph threshold_from_creation_sequence(const std::string& bits);

// Erdos-Gallai test; input entries must be non-negative (sorted internally).
bool is_graphical(std::vector<int> seq);

// Havel-Hakimi realization; nullopt when the sequence is not graphical.
std::optional<Graph> realize_sequence(std::vector<int> seq);

}  // namespace degseq
