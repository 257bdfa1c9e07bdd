#include "degseq/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace degseq {

Scalar sigma(const FunctionSpec& spec, const DegreeSequence& d) {
    Scalar acc;
    for (int v : d.values()) {
        if (v == 0) break;  // centered: f(0) = 0, and d is sorted
        acc = acc + eval(spec, v);
    }
    return acc;
}

Scalar sigma_via_conjugate(const FunctionSpec& spec, const DegreeSequence& d) {
    Scalar acc;
    const auto& conj = d.conjugate();
    for (int i = 1; i <= d.max_degree(); ++i)
        acc = acc + forward_difference(spec, i) * Scalar(conj[i - 1]);
    return acc;
}

Scalar chebyshev_bound(const FunctionSpec& spec, long m, int d1) {
    if (d1 < 2) throw std::domain_error("bound requires d1 >= 2 (m = 1 is enumerated directly)");
    if (m < d1) throw std::domain_error("bound requires m >= d1");
    Scalar f1 = eval(spec, 1);
    Scalar fd1 = eval(spec, d1);
    Scalar factor(Rational(2 * m - d1 - 1, d1 - 1));
    return f1 * Scalar(d1 + 1) + factor * (fd1 - f1);
}

ChebyshevVerdict chebyshev_inequality_check(const std::vector<Scalar>& a,
                                            const std::vector<Scalar>& b,
                                            long double tau) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) throw std::domain_error("sequences must be non-empty and equal length");
    ChebyshevVerdict out;
    out.a_constant = true;
    out.b_constant = true;
    for (std::size_t i = 1; i < n; ++i) {
        Cmp ca = compare(a[i - 1], a[i], tau);
        if (ca == Cmp::Greater) throw std::domain_error("first sequence must be non-decreasing");
        if (ca != Cmp::Equal) out.a_constant = false;
        Cmp cb = compare(b[i - 1], b[i], tau);
        if (cb == Cmp::Less) throw std::domain_error("second sequence must be non-increasing");
        if (cb != Cmp::Equal) out.b_constant = false;
    }
    Scalar dot, sum_a, sum_b;
    for (std::size_t i = 0; i < n; ++i) {
        dot = dot + a[i] * b[i];
        sum_a = sum_a + a[i];
        sum_b = sum_b + b[i];
    }
    out.lhs = Scalar(static_cast<long long>(n)) * dot;
    out.rhs = sum_a * sum_b;
    Cmp c = compare(out.lhs, out.rhs, tau);
    out.holds = cmp_le(c);
    out.equality = (c == Cmp::Equal || c == Cmp::NearTie);
    return out;
}

LocalSearchResult local_search_to_threshold(Graph g, const FunctionSpec& f) {
    std::vector<ExchangeStep> trace;
    for (;;) {
        ThresholdVerdict v = is_threshold(g);
        if (v.is_threshold) break;
        auto [i, j, k] = *v.violation;
        g = chain_exchange(g, i, j, k);
        trace.push_back({i, j, k, sigma(f, degree_sequence(g))});
    }
    Scalar value = sigma(f, degree_sequence(g));
    return {std::move(g), value, std::move(trace)};
}

MinimizationPlan plan_minimization(int n, long m, const FunctionSpec& g) {
    if (m < 0 || m > max_edges(n)) throw std::domain_error("edge count out of range");
    MinimizationPlan plan;
    if (m == 0) {
        plan.ell = 1;
        plan.nu = 0;
        plan.m_bar = 0;
        return plan;
    }
    long ell = 1;
    while (ell * (ell - 1) / 2 < m) ++ell;
    plan.ell = ell;
    plan.nu = ell - 1;
    plan.m_bar = ell * (ell - 1) / 2 - m;
    if (plan.nu >= 3) plan.hat_spec = make_hat(g, plan.nu);
    return plan;
}

ExtremalReport minimize_via_complement(int n, long m, const FunctionSpec& g,
                                       const EvalOptions& opts) {
    MinimizationPlan plan = plan_minimization(n, m, g);
    if (!plan.hat_spec) {
        ExtremalReport rep = find_extremal(g, n, m, Mode::Min, OracleKind::ThresholdOnly, opts);
        rep.oracle = OracleKind::ComplementDuality;
        rep.note = "direct enumeration fallback (nu < 3)";
        return rep;
    }
    const int ell = static_cast<int>(plan.ell);
    ExtremalReport inner = find_extremal(*plan.hat_spec, ell, plan.m_bar, Mode::Max,
                                         OracleKind::ThresholdOnly, opts);
    ExtremalReport rep;
    rep.objective = g;
    rep.n = n;
    rep.m = m;
    rep.mode = Mode::Min;
    rep.oracle = OracleKind::ComplementDuality;
    Scalar total = Scalar(plan.ell) * eval(g, plan.nu);
    rep.optimum = total - inner.optimum;
    auto complement_padded = [&](const DegreeSequence& d) {
        std::vector<int> out;
        out.reserve(n);
        for (int v : d.values()) out.push_back(static_cast<int>(plan.nu) - v);
        out.resize(n, 0);
        return DegreeSequence(out);
    };
    for (const auto& d : inner.optimal_sequences) rep.optimal_sequences.push_back(complement_padded(d));
    std::sort(rep.optimal_sequences.begin(), rep.optimal_sequences.end(),
              [](const DegreeSequence& a, const DegreeSequence& b) { return b < a; });
    for (const auto& t : inner.near_ties)
        rep.near_ties.push_back({complement_padded(t.sequence), t.gap});
    rep.unique = inner.unique;
    rep.note = "via complement duality, ell=" + std::to_string(plan.ell) +
               " nu=" + std::to_string(plan.nu) + " m_bar=" + std::to_string(plan.m_bar);
    return rep;
}

}  // namespace degseq
