#include "degseq/sparse.hpp"

#include <cmath>
#include <stdexcept>

#include "degseq/engine.hpp"

namespace degseq {

namespace {

constexpr long double kGridTol = 1e-12L;

void require_q(long q) {
    if (q < 4) throw std::domain_error("instance family requires q >= 4");
}

// h'(eps) divided by (q-1)^eps > 0; strictly decreasing in eps, so a sign
// change brackets the unique root.
long double h_prime_reduced(long q, long double eps) {
    long double l_qm1 = logl((long double)(q - 1));
    long double l_q2 = logl(q / 2.0L);
    return 2.0L * l_qm1 - (l_q2 + l_qm1) * powl(q / 2.0L, eps);
}

long double star_value(long q, long double eps) {
    long double m = (long double)q * (q - 1) / 2.0L;
    return m + powl(m, 1.0L + eps);
}

long double clique_value(long q, long double eps) {
    return (long double)q * powl((long double)(q - 1), 1.0L + eps);
}

template <typename Fn>
long double bisect(Fn fn, long double lo, long double hi, long double tol) {
    // invariant: fn(lo) > 0 > fn(hi)
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        long double mid = 0.5L * (lo + hi);
        if (fn(mid) > 0.0L)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5L * (lo + hi);
}

}  // namespace

long double h_value(long q, long double eps) {
    require_q(q);
    return powl((long double)(q - 1), eps) * (2.0L - powl(q / 2.0L, eps)) - 1.0L;
}

EpsilonWindow find_epsilon_window(long q, long double root_tol) {
    require_q(q);
    EpsilonWindow win;
    win.q = q;
    win.m_q = q * (q - 1) / 2;
    win.xi_upper_bound = logl(logl(9.0L) / logl(6.0L)) / logl(q / 2.0L);

    // h'(0) > 0 always; at q = 4 the bound itself is the root of h', so the
    // bracket extends to 1 where h' is strictly negative.
    long double hi = (h_prime_reduced(q, win.xi_upper_bound) < 0.0L) ? win.xi_upper_bound : 1.0L;
    if (!(h_prime_reduced(q, 0.0L) > 0.0L) || !(h_prime_reduced(q, hi) < 0.0L))
        throw std::runtime_error("failed to bracket the root of h' for q=" + std::to_string(q));
    win.xi = bisect([&](long double e) { return h_prime_reduced(q, e); }, 0.0L, hi, root_tol);
    win.xi_at_bound = fabsl(win.xi - win.xi_upper_bound) <= 1e-9L;

    long double h_at_xi = h_value(q, win.xi);
    if (!(h_at_xi > 0.0L))
        throw std::runtime_error("h(xi) not positive for q=" + std::to_string(q) +
                                 ": h=" + std::to_string((double)h_at_xi));
    if (!(h_value(q, 1.0L) < 0.0L))
        throw std::runtime_error("h(1) not negative for q=" + std::to_string(q));
    win.xi0 = bisect([&](long double e) { return h_value(q, e); }, win.xi, 1.0L, root_tol);

    // validate the window on the two competing degree sequences of the
    // instance family: the star on m leaves and the clique on q vertices,
    // both on n = m+1 vertices
    const int n = static_cast<int>(win.m_q) + 1;
    std::vector<int> star_deg(n, 1);
    star_deg[0] = static_cast<int>(win.m_q);
    std::vector<int> clique_deg(n, 0);
    for (long i = 0; i < q; ++i) clique_deg[i] = static_cast<int>(q) - 1;
    DegreeSequence star_seq(star_deg);
    DegreeSequence clique_seq(clique_deg);
    for (long double frac : {0.25L, 0.5L, 0.75L}) {
        EpsilonSample s;
        double beta = 1.0 + static_cast<double>(frac * win.xi0);
        s.eps = static_cast<long double>(beta) - 1.0L;
        FunctionSpec objective = FunctionSpec::power(beta);
        s.quasi_star_value = sigma(objective, star_seq).value();
        s.clique_value = sigma(objective, clique_seq).value();
        if (!(s.clique_value > s.quasi_star_value))
            throw std::runtime_error(
                "window sample failed for q=" + std::to_string(q) + " eps=" +
                std::to_string((double)s.eps) + ": star=" + std::to_string((double)s.quasi_star_value) +
                " clique=" + std::to_string((double)s.clique_value));
        win.samples.push_back(s);
    }
    return win;
}

CounterexampleRecord verify_counterexample(long q, long double eps) {
    require_q(q);
    if (!(eps > 0.0L && eps < 1.0L)) throw std::domain_error("eps must lie in (0,1)");
    CounterexampleRecord rec;
    rec.quasi_star_value = star_value(q, eps);
    rec.clique_value = clique_value(q, eps);
    rec.h = h_value(q, eps);
    rec.clique_wins = rec.clique_value > rec.quasi_star_value;
    rec.sign_consistent = rec.clique_wins == (rec.h > 0.0L);
    return rec;
}

GridScan check_appendix_inequality_9(const std::vector<double>& betas,
                                     const std::vector<double>& xs) {
    GridScan scan;
    scan.worst_margin = 1.0L;
    for (double beta : betas) {
        for (double x : xs) {
            if (x < 3.0 || beta < 2.0) throw std::domain_error("grid requires x >= 3 and beta >= 2");
            long double lhs = powl(1.0L - 1.0L / x, (long double)beta - 1.0L) +
                              ((long double)beta - 1.0L) / beta * (2.0L / x);
            long double margin = 1.0L - lhs;
            if (margin < scan.worst_margin) scan.worst_margin = margin;
            if (fabsl(margin) <= kGridTol) {
                scan.equality_points.emplace_back(beta, x);
            } else if (margin < 0.0L) {
                scan.ok = false;
                if (!scan.first_violation) scan.first_violation = {beta, x};
            }
        }
    }
    return scan;
}

long double check_phi(long double beta) {
    if (!(beta > 0.0L)) throw std::domain_error("phi expects beta > 0");
    return powl(3.0L, beta - 1.0L) + 1.0L - powl(2.0L, beta);
}

GridScan check_psi(double beta, const std::vector<double>& xs) {
    if (beta < 2.0) throw std::domain_error("psi scan requires beta >= 2");
    GridScan scan;
    scan.worst_margin = 1e30L;
    bool have_prev = false;
    long double prev = 0.0L;
    for (double x : xs) {
        if (x < 3.0) throw std::domain_error("psi scan requires x >= 3");
        long double lb = beta;
        long double psi = powl((long double)x, lb) - powl((long double)x - 1.0L, lb) -
                          2.0L * powl((long double)x, lb - 1.0L) + 1.0L;
        long double scale = fmaxl(1.0L, fabsl(psi));
        if (psi < scan.worst_margin) scan.worst_margin = psi;
        if (fabsl(psi) <= kGridTol * scale) scan.equality_points.emplace_back(beta, x);
        if (psi < -kGridTol * scale && !scan.first_violation) {
            scan.ok = false;
            scan.first_violation = {beta, x};
        }
        if (have_prev && psi < prev - kGridTol * fmaxl(1.0L, fabsl(prev)) && !scan.first_violation) {
            scan.ok = false;  // monotonicity broken
            scan.first_violation = {beta, x};
        }
        prev = psi;
        have_prev = true;
    }
    return scan;
}

std::vector<double> default_beta_grid() {
    std::vector<double> out;
    for (int i = 0; i <= 40; ++i) out.push_back(2.0 + 0.1 * i);
    return out;
}

std::vector<double> default_x_grid() {
    std::vector<double> out;
    for (int i = 0; i <= 194; ++i) out.push_back(3.0 + 0.5 * i);
    return out;
}

}  // namespace degseq
