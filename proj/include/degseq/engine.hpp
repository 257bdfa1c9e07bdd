#pragma once

#include <optional>
#include <vector>

#include "degseq/functions.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

// Sigma_f(d) = sum_i f(d_i)
Scalar sigma(const FunctionSpec& spec, const DegreeSequence& d);

// Same value through the conjugate identity: sum_{i=1}^{d_1} (f(i)-f(i-1)) d*_i
Scalar sigma_via_conjugate(const FunctionSpec& spec, const DegreeSequence& d);

// f(1)(d1+1) + (2m-d1-1)/(d1-1) * (f(d1)-f(1)); upper bound on Sigma_f over
// threshold graphs with maximum degree d1. Requires d1 >= 2 and m >= d1.
Scalar chebyshev_bound(const FunctionSpec& spec, long m, int d1);

struct ChebyshevVerdict {
    bool holds = false;      // n * sum(a_i b_i) <= sum(a) * sum(b)
    bool equality = false;   // exact equality (or within tau on the float path)
    bool a_constant = false;
    bool b_constant = false;
    Scalar lhs;  // n * sum(a_i b_i)
    Scalar rhs;  // sum(a) * sum(b)
};

// a non-decreasing, b non-increasing (checked; domain_error otherwise).
ChebyshevVerdict chebyshev_inequality_check(const std::vector<Scalar>& a,
                                            const std::vector<Scalar>& b,
                                            long double tau = kDefaultTau);

struct ExchangeStep {
    int i = 0, j = 0, k = 0;
    Scalar sigma_after;
};

struct LocalSearchResult {
    Graph graph;
    Scalar sigma_value;
    std::vector<ExchangeStep> trace;
};

// Repeatedly applies the chain exchange on the first violating triple until
// the graph is threshold. Sigma_f strictly increases at every step when f
// satisfies condition (1), which also guarantees termination.
LocalSearchResult local_search_to_threshold(Graph g, const FunctionSpec& f);

struct MinimizationPlan {
    long ell = 0;    // smallest l with m <= l(l-1)/2
    long nu = 0;     // ell - 1
    long m_bar = 0;  // C(ell,2) - m
    std::optional<FunctionSpec> hat_spec;  // absent when nu < 3 (enumeration fallback)
};

MinimizationPlan plan_minimization(int n, long m, const FunctionSpec& g);

// min Sigma_g over G(n,m) = ell*g(nu) - max Sigma_{hat} over G(ell, m_bar);
// minimizers are complements of the hat maximizers padded with isolated
// vertices. Falls back to direct threshold enumeration when nu < 3.
ExtremalReport minimize_via_complement(int n, long m, const FunctionSpec& g,
                                       const EvalOptions& opts = {});

}  // namespace degseq
