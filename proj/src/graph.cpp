#include "degseq/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : d_(std::move(degrees)) {
    const int n = static_cast<int>(d_.size());
    for (int v : d_) {
        if (v < 0 || v > n - 1) throw std::domain_error("degree out of range [0, n-1]");
    }
    std::sort(d_.begin(), d_.end(), std::greater<int>());
    sum_ = std::accumulate(d_.begin(), d_.end(), 0L);
    conj_.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int v : d_) {
            if (v >= i)
                ++count;
            else
                break;  // d_ is sorted
        }
        conj_[i - 1] = count;
    }
}

std::string DegreeSequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(d_[i]);
    }
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::domain_error("vertex count out of range [1, 64]");
    rows_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
}

void Graph::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::domain_error("vertex index out of range");
    if (i == j) throw std::domain_error("self-loops are not allowed");
}

int Graph::degree(int i) const { return std::popcount(rows_[i]); }

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = degree(i);
    return out;
}

void Graph::add_edge(int i, int j) {
    check_pair(i, j);
    if (adjacent(i, j)) throw std::domain_error("edge already present");
    rows_[i] |= std::uint64_t{1} << j;
    rows_[j] |= std::uint64_t{1} << i;
    ++m_;
}

void Graph::remove_edge(int i, int j) {
    check_pair(i, j);
    if (!adjacent(i, j)) throw std::domain_error("edge not present");
    rows_[i] &= ~(std::uint64_t{1} << j);
    rows_[j] &= ~(std::uint64_t{1} << i);
    --m_;
}

long max_edges(int n) { return static_cast<long>(n) * (n - 1) / 2; }

QuasiDecomposition quasi_decompose(long m) {
    if (m < 0) throw std::domain_error("edge count must be non-negative");
    long q = 1;
    while ((q + 1) * q / 2 <= m) ++q;
    return {q, m - q * (q - 1) / 2};
}

Graph make_quasi_complete(int n, long m) {
    if (m < 0 || m > max_edges(n)) throw std::domain_error("edge count out of range");
    auto [q, r] = quasi_decompose(m);
    Graph g(n);
    for (long i = 0; i < q; ++i)
        for (long j = i + 1; j < q; ++j) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    for (long j = 0; j < r; ++j) g.add_edge(static_cast<int>(q), static_cast<int>(j));
    return g;
}

Graph make_quasi_star(int n, long m) {
    if (m < 0 || m > max_edges(n)) throw std::domain_error("edge count out of range");
    return complement(make_quasi_complete(n, max_edges(n) - m));
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) out.add_edge(i, j);
    return out;
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence(g.degrees()); }

DegreeSequence quasi_complete_sequence(int n, long m) {
    return degree_sequence(make_quasi_complete(n, m));
}

DegreeSequence quasi_star_sequence(int n, long m) {
    return degree_sequence(make_quasi_star(n, m));
}

ThresholdVerdict is_threshold(const Graph& g) {
    const int n = g.vertex_count();
    const std::vector<int> deg = g.degrees();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i || deg[i] < deg[j]) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (g.adjacent(j, k) && !g.adjacent(i, k))
                    return {false, std::array<int, 3>{i, j, k}};
            }
        }
    }
    return {true, std::nullopt};
}

Graph chain_exchange(const Graph& g, int i, int j, int k) {
    if (i == j || j == k || i == k) throw std::domain_error("chain exchange needs distinct vertices");
    if (g.degree(i) < g.degree(j)) throw std::domain_error("chain exchange requires d_i >= d_j");
    if (!g.adjacent(j, k)) throw std::domain_error("chain exchange requires j ~ k");
    if (g.adjacent(i, k)) throw std::domain_error("chain exchange requires i !~ k");
    Graph out = g;
    out.remove_edge(j, k);
    out.add_edge(i, k);
    return out;
}

Graph threshold_from_creation_sequence(const std::string& bits) {
    if (bits.empty()) throw std::domain_error("creation sequence must be non-empty");
    const int n = static_cast<int>(bits.size());
    Graph g(n);
    for (int t = 0; t < n; ++t) {
        char c = bits[t];
        if (c != 'i' && c != 'd') throw std::domain_error("creation sequence expects 'i'/'d'");
        if (t == 0) continue;  // first symbol just starts the graph
        if (c == 'd')
            for (int v = 0; v < t; ++v) g.add_edge(t, v);
    }
    return g;
}

bool is_graphical(std::vector<int> seq) {
    for (int v : seq)
        if (v < 0) throw std::domain_error("degrees must be non-negative");
    std::sort(seq.begin(), seq.end(), std::greater<int>());
    const int n = static_cast<int>(seq.size());
    long total = std::accumulate(seq.begin(), seq.end(), 0L);
    if (total % 2 != 0) return false;
    long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += seq[k - 1];
        long rhs = static_cast<long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(seq[i], k);
        if (prefix > rhs) return false;
    }
    return true;
}

std::optional<Graph> realize_sequence(std::vector<int> seq) {
    const int n = static_cast<int>(seq.size());
    if (n < 1 || n > kMaxVertices) return std::nullopt;
    std::vector<std::pair<int, int>> residual(n);  // (remaining degree, vertex)
    for (int i = 0; i < n; ++i) {
        if (seq[i] < 0 || seq[i] > n - 1) return std::nullopt;
        residual[i] = {seq[i], i};
    }
    Graph g(n);
    for (int round = 0; round < n; ++round) {
        std::sort(residual.begin(), residual.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        auto [d, v] = residual.front();
        if (d == 0) break;
        if (d >= n) return std::nullopt;
        residual.front().first = 0;
        for (int t = 1; t <= d; ++t) {
            if (t >= n || residual[t].first == 0) return std::nullopt;
            g.add_edge(v, residual[t].second);
            --residual[t].first;
        }
    }
    return g;
}

}  // namespace degseq
