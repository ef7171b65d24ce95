#include "hulthen/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hulthen::oracle {

namespace {

struct SimpsonPanel {
    double fa, fm, fb;
    double value;  // Simpson estimate on [a,b]
};

SimpsonPanel simpson(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb) {
    return {fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb)};
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth, const QuadSpec& spec) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;  // fifth-order correction
    if (depth >= spec.max_depth)
        throw convergence_failure_error("adaptive_quad: max_depth exceeded",
                                        left + right + delta / 15.0);
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, spec) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, spec);
}

// Count of eigenvalues of the tridiagonal FD matrix strictly below lambda,
// by the Sturm sequence of leading-minor pivots.
long sturm_count(const std::vector<double>& diag, double off_sq, double lambda) {
    long count = 0;
    double t = 0.0;
    bool first = true;
    for (double d : diag) {
        double pivot = first ? (d - lambda) : (d - lambda) - off_sq / t;
        first = false;
        if (pivot == 0.0) pivot = -1e-300;
        if (pivot < 0.0) ++count;
        t = pivot;
    }
    return count;
}

std::vector<double> fd_negative_eigenvalues(const std::function<double(double)>& potential,
                                            double log_q, long n_interior, double r_max,
                                            double eig_tol) {
    const double h = (r_max - log_q) / static_cast<double>(n_interior + 1);
    const double off_sq = 1.0 / (h * h * h * h);  // (1/h^2)^2
    std::vector<double> diag(static_cast<std::size_t>(n_interior));
    double v_min = 0.0;
    for (long i = 1; i <= n_interior; ++i) {
        double v = potential(log_q + h * static_cast<double>(i));
        diag[static_cast<std::size_t>(i - 1)] = 2.0 / (h * h) + v;
        v_min = std::min(v_min, v);
    }
    const long negatives = sturm_count(diag, off_sq, 0.0);
    std::vector<double> eigs;
    for (long k = 0; k < negatives; ++k) {
        double lo = v_min, hi = 0.0;
        while (hi - lo > eig_tol) {
            double mid = 0.5 * (lo + hi);
            if (sturm_count(diag, off_sq, mid) >= k + 1)
                hi = mid;
            else
                lo = mid;
        }
        eigs.push_back(0.5 * (lo + hi));
    }
    return eigs;
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     const QuadSpec& spec) {
    if (!(b > a)) return 0.0;
    // Seed with a fixed partition so sharply localized integrands (half-line
    // tails of bound states) cannot fool the first coarse Simpson estimate.
    constexpr int kPanels = 32;
    const double h = (b - a) / kPanels;
    double total = 0.0;
    for (int k = 0; k < kPanels; ++k) {
        const double lo = a + h * k, hi = (k + 1 == kPanels) ? b : a + h * (k + 1);
        const double m = 0.5 * (lo + hi);
        const double fa = f(lo), fm = f(m), fb = f(hi);
        auto whole = simpson(f, lo, hi, fa, fm, fb);
        total += adaptive_step(f, lo, hi, fa, fm, fb, whole.value, spec.tol / kPanels, 0, spec);
    }
    return total;
}

double default_r_max(const ReducedParams& p) {
    const long count = bound_state_count(p);
    if (count == 0) return std::log(p.q) + 60.0;
    const double shallowest = -energy(p, count - 1);
    return std::log(p.q) + std::max(60.0, 40.0 / std::sqrt(shallowest));
}

std::vector<double> fd_spectrum(const std::function<double(double)>& potential,
                                double log_q, const FDSpec& spec) {
    if (spec.grid_points < 64) throw usage_error("fd_spectrum: need at least 64 grid points");
    if (!(spec.r_max > log_q)) throw usage_error("fd_spectrum: r_max must exceed log q");
    return fd_negative_eigenvalues(potential, log_q, spec.grid_points, spec.r_max, spec.eig_tol);
}

std::vector<double> fd_spectrum_extrapolated(const std::function<double(double)>& potential,
                                             double log_q, const FDSpec& spec) {
    auto coarse = fd_spectrum(potential, log_q, spec);
    FDSpec fine = spec;
    fine.grid_points = 2 * spec.grid_points + 1;  // halves h exactly
    auto refined = fd_spectrum(potential, log_q, fine);
    std::size_t m = std::min(coarse.size(), refined.size());
    std::vector<double> out;
    for (std::size_t k = 0; k < m; ++k)
        out.push_back((4.0 * refined[k] - coarse[k]) / 3.0);
    // eigenvalues that only the fine grid resolves are kept unextrapolated
    for (std::size_t k = m; k < refined.size(); ++k) out.push_back(refined[k]);
    return out;
}

std::vector<std::vector<double>> gram_matrix(const std::vector<ExpPoly<double>>& states,
                                             const QuadSpec& spec) {
    for (std::size_t i = 1; i < states.size(); ++i)
        exppoly::require_same_q(states[0], states[i]);
    const std::size_t k = states.size();
    std::vector<std::vector<double>> g(k, std::vector<double>(k, 0.0));
    if (k == 0) return g;
    const double log_q = std::log(states[0].q);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            auto integrand = [&](double r) {
                return exppoly::evaluate(states[i], r) * exppoly::evaluate(states[j], r);
            };
            g[i][j] = g[j][i] = adaptive_quad(integrand, log_q, spec.r_max, spec);
        }
    return g;
}

}  // namespace hulthen::oracle
