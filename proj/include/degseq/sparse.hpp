#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace degseq {

// h(q, eps) = (q-1)^eps (2 - (q/2)^eps) - 1. Positive h means the clique
// K_q plus isolated vertices beats the star on the instance family
// n = m+1, m = q(q-1)/2 for the exponent 1+eps.
long double h_value(long q, long double eps);

struct EpsilonSample {
    long double eps = 0.0L;
    long double quasi_star_value = 0.0L;  // m + m^{1+eps}
    long double clique_value = 0.0L;      // q (q-1)^{1+eps}
};

struct EpsilonWindow {
    long q = 0;
    long m_q = 0;                        // q(q-1)/2
    long double xi = 0.0L;               // argmax of h (root of h')
    long double xi0 = 0.0L;              // positive root of h
    long double xi_upper_bound = 0.0L;   // ln(ln 9 / ln 6) / ln(q/2)
    bool xi_at_bound = false;            // xi equals the bound within tolerance (q = 4)
    std::vector<EpsilonSample> samples;  // eps in {xi0/4, xi0/2, 3 xi0/4}
};

// Bisection roots to root_tol; throws std::runtime_error with diagnostic
// samples if a bracket cannot be established or a window sample fails.
EpsilonWindow find_epsilon_window(long q, long double root_tol = 1e-12L);

struct CounterexampleRecord {
    long double quasi_star_value = 0.0L;
    long double clique_value = 0.0L;
    long double h = 0.0L;
    bool clique_wins = false;      // clique value strictly above the star value
    bool sign_consistent = false;  // verdict matches sign of h
};

CounterexampleRecord verify_counterexample(long q, long double eps);

struct GridScan {
    bool ok = true;
    long double worst_margin = 0.0L;  // most negative slack observed
    std::optional<std::pair<double, double>> first_violation;  // grid point
    std::vector<std::pair<double, double>> equality_points;    // |margin| <= tolerance
};

// (1 - 1/x)^{beta-1} + ((beta-1)/beta) (2/x) <= 1 over the grid.
GridScan check_appendix_inequality_9(const std::vector<double>& betas,
                                     const std::vector<double>& xs);

// 3^{beta-1} + 1 - 2^beta
long double check_phi(long double beta);

// psi(x) = x^beta - (x-1)^beta - 2 x^{beta-1} + 1: non-negative and
// non-decreasing along the grid.
GridScan check_psi(double beta, const std::vector<double>& xs);

std::vector<double> default_beta_grid();  // 2.0 .. 6.0 step 0.1
std::vector<double> default_x_grid();     // 3.0 .. 100.0 step 0.5

}  // namespace degseq
