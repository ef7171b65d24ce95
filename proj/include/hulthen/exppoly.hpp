#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hulthen/errors.hpp"
#include "hulthen/scalar.hpp"

namespace hulthen {

// Exact representation of  sum_k e^{alpha_k r} P_k(t),  t = q e^{-r},  on
// r in [log q, infinity).  Closed under +, *, d/dr, Wronskians and exact
// division, which is where all Hulthen eigenfunctions and their Darboux
// transforms live.  Values are immutable once canonicalized.
template <class T>
struct ExpPoly {
    struct Term {
        T alpha;              // exponent multiplying r
        std::vector<T> poly;  // coefficients in t, constant term first
    };

    T q{};
    std::vector<Term> terms;  // sorted by alpha, exponents unique

    static ExpPoly zero(const T& q) { return ExpPoly{q, {}}; }

    static ExpPoly monomial(const T& q, const T& alpha, std::vector<T> poly) {
        ExpPoly f{q, {Term{alpha, std::move(poly)}}};
        f.canonicalize();
        return f;
    }

    static ExpPoly constant(const T& q, const T& value) {
        return monomial(q, scalar_from_int<T>(0), {value});
    }

    bool is_zero() const { return terms.empty(); }

    // Restores the invariants: terms sorted by alpha, duplicates merged
    // (exactly in rational mode, within 1e-12 in float mode), trailing
    // negligible coefficients trimmed, empty terms dropped.
    void canonicalize() {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return to_double(a.alpha) < to_double(b.alpha);
        });
        std::vector<Term> merged;
        for (Term& t : terms) {
            bool same = false;
            if (!merged.empty()) {
                if constexpr (is_rational_v<T>)
                    same = merged.back().alpha == t.alpha;
                else
                    same = std::abs(merged.back().alpha - t.alpha) <= 1e-12;
            }
            if (same) {
                auto& p = merged.back().poly;
                if (p.size() < t.poly.size()) p.resize(t.poly.size(), scalar_from_int<T>(0));
                for (std::size_t i = 0; i < t.poly.size(); ++i) p[i] += t.poly[i];
            } else {
                merged.push_back(std::move(t));
            }
        }
        terms.clear();
        for (Term& t : merged) {
            trim(t.poly);
            if (!t.poly.empty()) terms.push_back(std::move(t));
        }
    }

    static void trim(std::vector<T>& poly) {
        if constexpr (is_rational_v<T>) {
            while (!poly.empty() && poly.back() == 0) poly.pop_back();
        } else {
            double scale = 0.0;
            for (const T& c : poly) scale = std::max(scale, std::abs(c));
            while (!poly.empty() && std::abs(poly.back()) <= 1e-14 * scale) poly.pop_back();
            if (scale == 0.0) poly.clear();
        }
    }
};

namespace exppoly {

template <class T>
void require_same_q(const ExpPoly<T>& f, const ExpPoly<T>& g) {
    bool same;
    if constexpr (is_rational_v<T>)
        same = f.q == g.q;
    else
        same = f.q == g.q || std::abs(f.q - g.q) <= 1e-15 * std::abs(f.q);
    if (!same) throw usage_error("ExpPoly operands carry different q");
}

template <class T>
ExpPoly<T> add(const ExpPoly<T>& f, const ExpPoly<T>& g) {
    require_same_q(f, g);
    ExpPoly<T> r{f.q, f.terms};
    r.terms.insert(r.terms.end(), g.terms.begin(), g.terms.end());
    r.canonicalize();
    return r;
}

template <class T>
ExpPoly<T> scale(const ExpPoly<T>& f, const T& c) {
    ExpPoly<T> r = f;
    for (auto& t : r.terms)
        for (auto& a : t.poly) a *= c;
    r.canonicalize();
    return r;
}

template <class T>
ExpPoly<T> sub(const ExpPoly<T>& f, const ExpPoly<T>& g) {
    return add(f, scale(g, scalar_from_int<T>(-1)));
}

template <class T>
ExpPoly<T> mul(const ExpPoly<T>& f, const ExpPoly<T>& g) {
    require_same_q(f, g);
    ExpPoly<T> r = ExpPoly<T>::zero(f.q);
    for (const auto& a : f.terms)
        for (const auto& b : g.terms) {
            typename ExpPoly<T>::Term t;
            t.alpha = a.alpha + b.alpha;
            t.poly.assign(a.poly.size() + b.poly.size() - 1, scalar_from_int<T>(0));
            for (std::size_t i = 0; i < a.poly.size(); ++i)
                for (std::size_t j = 0; j < b.poly.size(); ++j)
                    t.poly[i + j] += a.poly[i] * b.poly[j];
            r.terms.push_back(std::move(t));
        }
    r.canonicalize();
    return r;
}

// d/dr [e^{alpha r} P(t)] = e^{alpha r} (alpha P(t) - t P'(t)),  dt/dr = -t.
template <class T>
ExpPoly<T> differentiate(const ExpPoly<T>& f) {
    ExpPoly<T> r = ExpPoly<T>::zero(f.q);
    for (const auto& term : f.terms) {
        typename ExpPoly<T>::Term d;
        d.alpha = term.alpha;
        d.poly.resize(term.poly.size(), scalar_from_int<T>(0));
        for (std::size_t k = 0; k < term.poly.size(); ++k)
            d.poly[k] = term.poly[k] * (term.alpha - scalar_from_int<T>(static_cast<long>(k)));
        r.terms.push_back(std::move(d));
    }
    r.canonicalize();
    return r;
}

namespace detail {

template <class T>
ExpPoly<T> det_minor(const std::vector<std::vector<ExpPoly<T>>>& m,
                     std::vector<std::size_t> cols, std::size_t row) {
    if (cols.size() == 1) return m[row][cols[0]];
    ExpPoly<T> acc = ExpPoly<T>::zero(m[0][0].q);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (i != k) rest.push_back(cols[i]);
        ExpPoly<T> cofactor = mul(m[row][cols[k]], det_minor(m, rest, row + 1));
        if (k % 2 == 1) cofactor = scale(cofactor, scalar_from_int<T>(-1));
        acc = add(acc, cofactor);
    }
    return acc;
}

}  // namespace detail

// Classical Wronskian determinant W(f_1,...,f_k): row i holds the i-th
// derivatives, expanded by cofactors in ExpPoly arithmetic.  Depth <= 6.
template <class T>
ExpPoly<T> wronskian(const std::vector<ExpPoly<T>>& fs) {
    if (fs.empty() || fs.size() > 6)
        throw usage_error("wronskian: need between 1 and 6 functions");
    for (std::size_t i = 1; i < fs.size(); ++i) require_same_q(fs[0], fs[i]);
    if (fs.size() == 1) return fs[0];

    const std::size_t k = fs.size();
    std::vector<std::vector<ExpPoly<T>>> m(k);  // m[row][col] = d^row f_col / dr^row
    m[0] = fs;
    for (std::size_t d = 1; d < k; ++d) {
        m[d].reserve(k);
        for (std::size_t c = 0; c < k; ++c) m[d].push_back(differentiate(m[d - 1][c]));
    }
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    return detail::det_minor(m, cols, 0);
}

template <class T>
double max_abs_coeff(const ExpPoly<T>& f) {
    double m = 0.0;
    for (const auto& t : f.terms)
        for (const auto& c : t.poly) m = std::max(m, std::abs(to_double(c)));
    return m;
}

// Exact division by a single-exponent denominator e^{beta r} Q(t).  The
// polynomial long division of every numerator term must come out remainder
// free (within 1e-9 of the input scale in float mode, exactly in rational
// mode); a nonzero remainder signals a theory violation.
template <class T>
ExpPoly<T> divide_exact(const ExpPoly<T>& num, const ExpPoly<T>& den) {
    require_same_q(num, den);
    if (den.terms.size() != 1 || den.terms[0].poly.empty())
        throw usage_error("divide_exact: denominator must be a single nonzero exponent term");
    const auto& d = den.terms[0];
    const double num_scale = std::max(1e-300, max_abs_coeff(num));

    ExpPoly<T> result = ExpPoly<T>::zero(num.q);
    for (const auto& term : num.terms) {
        if (term.poly.size() < d.poly.size())
            throw theory_violation_error("divide_exact: numerator degree below denominator degree");
        std::vector<T> rem = term.poly;
        std::vector<T> quot(term.poly.size() - d.poly.size() + 1, scalar_from_int<T>(0));
        const std::size_t dd = d.poly.size() - 1;
        for (std::size_t k = quot.size(); k-- > 0;) {
            T c = rem[k + dd] / d.poly[dd];
            quot[k] = c;
            for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= c * d.poly[i];
        }
        for (const T& c : rem) {
            bool ok;
            if constexpr (is_rational_v<T>)
                ok = c == 0;
            else
                ok = std::abs(c) <= 1e-9 * num_scale;
            if (!ok) throw theory_violation_error("divide_exact: nonzero remainder");
        }
        result.terms.push_back({term.alpha - d.alpha, std::move(quot)});
    }
    result.canonicalize();
    return result;
}

// Pointwise value at r >= log q, via Horner in t = q e^{-r}.
template <class T>
double evaluate(const ExpPoly<T>& f, double r) {
    const double q = to_double(f.q);
    const double log_q = std::log(q);
    if (r < log_q - 1e-12) throw domain_error("evaluate: r below log(q)");
    const double t = q * std::exp(-r);
    double total = 0.0;
    for (const auto& term : f.terms) {
        double p = 0.0;
        for (std::size_t i = term.poly.size(); i-- > 0;) p = p * t + to_double(term.poly[i]);
        total += std::exp(to_double(term.alpha) * r) * p;
    }
    return total;
}

template <class T>
ExpPoly<double> to_float(const ExpPoly<T>& f) {
    ExpPoly<double> r;
    r.q = to_double(f.q);
    for (const auto& t : f.terms) {
        typename ExpPoly<double>::Term ft;
        ft.alpha = to_double(t.alpha);
        for (const auto& c : t.poly) ft.poly.push_back(to_double(c));
        r.terms.push_back(std::move(ft));
    }
    r.canonicalize();
    return r;
}

}  // namespace exppoly
}  // namespace hulthen
