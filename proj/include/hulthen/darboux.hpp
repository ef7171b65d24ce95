#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "hulthen/exppoly.hpp"
#include "hulthen/hulthen.hpp"

namespace hulthen::darboux {

enum class Route { wronskian, closed_form };

template <class T>
struct ChainState {
    long j;  // chain depth
    long n;  // state index, n >= j
    ExpPoly<T> psi;
    Route route;
    // crum_chain output = proportionality * closed_form output
    double proportionality = 1.0;
};

struct ChainPotential {
    double v;
    double q;
    double barrier;  // j (j+1) q
    long j;
};

namespace detail {

// Count sign changes of the coefficient polynomial on t in (0, 1) via a
// Sturm sequence; used as the exact half of the nodelessness assertion.
long poly_root_count_01(const std::vector<double>& coeffs);

}  // namespace detail

// Seeds must not vanish on (log q, infinity): sign sampling at 200 points
// plus a real-root count of each term polynomial on (0,1) in t.
template <class T>
bool is_nodeless(const ExpPoly<T>& f) {
    if (f.is_zero()) return false;
    const double q = to_double(f.q);
    const double log_q = std::log(q);
    // evaluate with the fastest-growing exponential factored out, so deep
    // tails keep their sign instead of underflowing to zero
    double alpha_max = to_double(f.terms[0].alpha);
    for (const auto& term : f.terms) alpha_max = std::max(alpha_max, to_double(term.alpha));
    auto scaled_value = [&](double r) {
        double t = q * std::exp(-r);
        double sum = 0.0;
        for (const auto& term : f.terms) {
            double poly = 0.0;
            for (auto it = term.poly.rbegin(); it != term.poly.rend(); ++it)
                poly = poly * t + to_double(*it);
            sum += std::exp((to_double(term.alpha) - alpha_max) * r) * poly;
        }
        return sum;
    };
    double sign = 0.0;
    for (int i = 1; i <= 200; ++i) {
        double r = log_q + 40.0 * static_cast<double>(i) / 200.0;
        double value = scaled_value(r);
        if (value == 0.0) return false;
        double s = value > 0 ? 1.0 : -1.0;
        if (sign != 0.0 && s != sign) return false;
        sign = s;
    }
    if (f.terms.size() == 1) {
        std::vector<double> coeffs;
        for (const auto& c : f.terms[0].poly) coeffs.push_back(to_double(c));
        if (detail::poly_root_count_01(coeffs) != 0) return false;
    }
    return true;
}

// Single Darboux step:  (d/dr - seed'/seed) state = W(seed, state) / seed.
template <class T>
ExpPoly<T> darboux_once(const ExpPoly<T>& seed, const ExpPoly<T>& state) {
    exppoly::require_same_q(seed, state);
    if (!is_nodeless(seed))
        throw theory_violation_error("darboux_once: seed has a node on (log q, infinity)");
    ExpPoly<T> w = exppoly::wronskian<T>({seed, state});
    if (w.is_zero()) return w;
    return exppoly::divide_exact(w, seed);
}

// j-fold Crum chain with consecutive ground seeds psi_{0,0}..psi_{0,j-1}:
//   psi_{j,n} = W(psi_{0,0},...,psi_{0,j-1}, psi_{0,n}) / W(psi_{0,0},...,psi_{0,j-1}).
template <class T>
ChainState<T> crum_chain(const ReducedParamsT<T>& p, long j, long n) {
    if (j < 0 || j > 4) throw usage_error("crum_chain: chain depth must be in [0, 4]");
    if (n < j) throw no_such_state_error("crum_chain: requires n >= j");
    require_state(p, n);
    if (j == 0) return {0, n, eigenfunction(p, n), Route::wronskian, 1.0};

    if constexpr (std::is_same_v<T, double>) {
        // doubles are exact rationals; assembling the Wronskian ratio without
        // rounding keeps the route comparison sharp near the (1-t) zeros
        ReducedParamsT<Rational> pe{Rational(p.v), Rational(p.q)};
        auto exact = crum_chain(pe, j, n);
        return {j, n, exppoly::to_float(exact.psi), Route::wronskian, 1.0};
    }

    std::vector<ExpPoly<T>> seeds;
    for (long i = 0; i < j; ++i) seeds.push_back(eigenfunction(p, i));
    if (!is_nodeless(seeds[0]))
        throw theory_violation_error("crum_chain: ground seed has a node");
    ExpPoly<T> den = exppoly::wronskian(seeds);
    if (!is_nodeless(den))
        throw theory_violation_error("crum_chain: seed Wronskian has a node");
    seeds.push_back(eigenfunction(p, n));
    ExpPoly<T> num = exppoly::wronskian(seeds);
    return {j, n, exppoly::divide_exact(num, den), Route::wronskian, 1.0};
}

// Closed-form chain state
//   e^{-(v/(2q(n+1)) - (n+1)/2) r} (1-t)^{j+1} 2F1(j-n, j+1 + v/(q(n+1)); v/(q(n+1)) - n; t).
template <class T>
ChainState<T> closed_form_chain_state(const ReducedParamsT<T>& p, long j, long n) {
    if (j < 0 || j > 4) throw usage_error("closed_form_chain_state: chain depth must be in [0, 4]");
    if (n < j) throw no_such_state_error("closed_form_chain_state: requires n >= j");
    require_state(p, n);
    T w = hyp_parameter(p, n);
    auto f = specfun::hyp2f1_poly<T>(n - j, scalar_from_int<T>(j + 1) + w,
                                     w - scalar_from_int<T>(n));
    std::vector<T> poly = f;
    for (long pass = 0; pass <= j; ++pass) {  // multiply by (1-t)^{j+1}
        std::vector<T> next(poly.size() + 1, scalar_from_int<T>(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= poly[k];
        }
        poly = std::move(next);
    }
    T alpha = scalar_from_int<T>(n + 1) / scalar_from_int<T>(2) - w / scalar_from_int<T>(2);
    return {j, n, ExpPoly<T>::monomial(p.q, alpha, std::move(poly)), Route::closed_form, 1.0};
}

// Ratio of the leading polynomial coefficients at the shared exponent;
// pointwise sampling is used only to verify the ratio is constant.
template <class T>
double route_proportionality(const ExpPoly<T>& wronskian_route, const ExpPoly<T>& closed_route) {
    if (wronskian_route.terms.size() != 1 || closed_route.terms.size() != 1)
        throw theory_violation_error("route_proportionality: chain states must be single-exponent");
    const auto& a = wronskian_route.terms[0].poly;
    const auto& b = closed_route.terms[0].poly;
    if (a.size() != b.size())
        throw theory_violation_error("route_proportionality: route degrees differ");
    return to_double(a.back()) / to_double(b.back());
}

// Both routes, with the proportionality constant attached.
template <class T>
std::pair<ChainState<T>, ChainState<T>> chain_both_routes(const ReducedParamsT<T>& p, long j, long n) {
    ChainState<T> wr = crum_chain(p, j, n);
    ChainState<T> cf = closed_form_chain_state(p, j, n);
    double c = route_proportionality(wr.psi, cf.psi);
    wr.proportionality = c;
    cf.proportionality = c;
    return {std::move(wr), std::move(cf)};
}

template <class T>
ChainPotential chain_potential(const ReducedParamsT<T>& p, long j) {
    if (j < 0) throw usage_error("chain_potential: j >= 0 required");
    validate(p);
    double q = to_double(p.q);
    return {to_double(p.v), q, static_cast<double>(j) * static_cast<double>(j + 1) * q, j};
}

// Evaluator for -2 (log W(psi_{0,0},...,psi_{0,j-1}))'' computed exactly as
// 2 (W'^2 - W'' W) / W^2 in ExpPoly arithmetic; equals j(j+1) q e^r/(e^r-q)^2.
template <class T>
struct LogWronskianCurvature {
    ExpPoly<T> numer;  // 2 (W'^2 - W'' W)
    ExpPoly<T> denom;  // W^2
    double operator()(double r) const {
        return exppoly::evaluate(numer, r) / exppoly::evaluate(denom, r);
    }
};

template <class T>
LogWronskianCurvature<T> log_wronskian_curvature(const ReducedParamsT<T>& p, long j) {
    if (j < 1 || j > 4) throw usage_error("log_wronskian_curvature: 1 <= j <= 4");
    if constexpr (std::is_same_v<T, double>) {
        // every double is an exact rational, so the heavily cancelling
        // W'^2 - W'' W combination can be assembled without rounding junk
        ReducedParamsT<Rational> pe{Rational(p.v), Rational(p.q)};
        auto exact = log_wronskian_curvature(pe, j);
        return {exppoly::to_float(exact.numer), exppoly::to_float(exact.denom)};
    } else {
        std::vector<ExpPoly<T>> seeds;
        for (long i = 0; i < j; ++i) seeds.push_back(eigenfunction(p, i));
        ExpPoly<T> w = exppoly::wronskian(seeds);
        ExpPoly<T> w1 = exppoly::differentiate(w);
        ExpPoly<T> w2 = exppoly::differentiate(w1);
        ExpPoly<T> numer = exppoly::scale(
            exppoly::sub(exppoly::mul(w1, w1), exppoly::mul(w2, w)), scalar_from_int<T>(2));
        ExpPoly<T> denom = exppoly::mul(w, w);
        // strip the shared (1-t)^k factor so the float evaluation of the
        // ratio stays well conditioned near t = 1
        auto divisible_by_one_minus_t = [](const std::vector<T>& poly) {
            if (poly.size() < 2) return false;
            T rem = scalar_from_int<T>(0);
            for (const auto& c : poly) rem += c;
            return rem == scalar_from_int<T>(0);
        };
        auto divide_one_minus_t = [](std::vector<T>& poly) {
            std::vector<T> q(poly.size() - 1, scalar_from_int<T>(0));
            // poly = (1 - t) q  =>  q_k = sum_{i<=k} poly_i
            T acc = scalar_from_int<T>(0);
            for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
                acc += poly[k];
                q[k] = acc;
            }
            poly = std::move(q);
        };
        if (numer.terms.size() == 1 && denom.terms.size() == 1) {
            while (divisible_by_one_minus_t(numer.terms[0].poly) &&
                   divisible_by_one_minus_t(denom.terms[0].poly)) {
                divide_one_minus_t(numer.terms[0].poly);
                divide_one_minus_t(denom.terms[0].poly);
            }
        }
        return {std::move(numer), std::move(denom)};
    }
}

// Squared norm of the Wronskian-route chain state:
//   I_nn * prod_{i=0}^{j-1} (E_n - E_i).
double chain_norm(const ReducedParams& p, long j, long n);

// Report-only evaluation of the published chain-norm identity, whose "N_n"
// symbol admits two readings: reading_a takes the normalization constant
// I_nn^{-1/2}; reading_b takes the norm integral I_nn.
struct ChainNormReadings {
    double factor;     // the Pochhammer product multiplying N_n
    double reading_a;  // factor * I_nn^{-1/2}
    double reading_b;  // factor * I_nn
};

ChainNormReadings chain_norm_readings(const ReducedParams& p, long j, long n);

}  // namespace hulthen::darboux
