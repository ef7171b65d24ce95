#include "hulthen/darboux.hpp"

#include <cmath>

namespace hulthen::darboux {

namespace detail {

namespace {

std::vector<double> poly_derivative(const std::vector<double>& p) {
    std::vector<double> d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<double>(k));
    return d;
}

// Remainder of a / b with flipped sign, as Sturm sequences require.
std::vector<double> neg_poly_rem(std::vector<double> a, const std::vector<double>& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        double c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
    }
    double scale = 0.0;
    for (double c : a) scale = std::max(scale, std::abs(c));
    while (!a.empty() && std::abs(a.back()) <= 1e-12 * std::max(scale, 1.0)) a.pop_back();
    for (double& c : a) c = -c;
    return a;
}

double poly_eval(const std::vector<double>& p, double x) {
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

long sign_changes(const std::vector<std::vector<double>>& chain, double x) {
    long changes = 0;
    double prev = 0.0;
    for (const auto& p : chain) {
        double v = poly_eval(p, x);
        if (v == 0.0) continue;
        if (prev != 0.0 && ((prev > 0) != (v > 0))) ++changes;
        prev = v;
    }
    return changes;
}

}  // namespace

long poly_root_count_01(const std::vector<double>& coeffs) {
    std::vector<double> p = coeffs;
    ExpPoly<double>::trim(p);
    // deflate the (possibly multiple) boundary root at t = 1 up front; a
    // multiple root would otherwise degrade the Sturm remainder sequence
    while (p.size() > 1) {
        double scale = 0.0;
        for (double c : p) scale = std::max(scale, std::abs(c));
        if (std::abs(poly_eval(p, 1.0)) > 1e-9 * scale) break;
        std::vector<double> q(p.size() - 1, 0.0);
        double carry = p.back();
        for (std::size_t k = p.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = p[k] + carry;
        }
        p = std::move(q);
    }
    if (p.size() <= 1) return 0;
    std::vector<std::vector<double>> chain = {p, poly_derivative(p)};
    while (chain.back().size() > 1) {
        auto r = neg_poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    // open interval: nudge the endpoints inward to dodge the boundary zeros
    // every eigenfunction carries at t = 1
    return sign_changes(chain, 1e-9) - sign_changes(chain, 1.0 - 1e-9);
}

}  // namespace detail

double chain_norm(const ReducedParams& p, long j, long n) {
    if (n < j) throw no_such_state_error("chain_norm: requires n >= j");
    double result = norm_integral(p, n, n);
    for (long i = 0; i < j; ++i) result *= energy(p, n) - energy(p, i);
    return result;
}

ChainNormReadings chain_norm_readings(const ReducedParams& p, long j, long n) {
    if (n < j) throw no_such_state_error("chain_norm_readings: requires n >= j");
    require_state(p, n);
    using specfun::pochhammer;
    const double w = p.v / ((j + n + 1) * p.q);
    const double denom = std::pow(std::pow(2.0, j) * pochhammer(static_cast<double>(n + 1), j), 2);
    double factor = pochhammer(static_cast<double>(-j), j) *
                    pochhammer(static_cast<double>(j + 2 * n + 2), j) / denom *
                    pochhammer(n - w + 1, j) * pochhammer(n + w + 1, j);
    const double inn = norm_integral(p, n, n);
    return {factor, factor / std::sqrt(inn), factor * inn};
}

}  // namespace hulthen::darboux
