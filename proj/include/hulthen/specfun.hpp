#pragma once

#include <array>
#include <cstdlib>
#include <utility>
#include <vector>

#include "hulthen/errors.hpp"
#include "hulthen/scalar.hpp"

namespace hulthen::specfun {

// ln Gamma(x) for x > 0, Lanczos approximation.  Poles and x <= 0 are rejected.
double log_gamma(double x);

// Rising factorial (a)_k = a (a+1) ... (a+k-1);  (a)_0 = 1.
template <class T>
T pochhammer(const T& a, long k) {
    T r = scalar_from_int<T>(1);
    for (long i = 0; i < k; ++i) r *= a + scalar_from_int<T>(i);
    return r;
}

namespace detail {

// Kahan accumulator for float mode; plain exact sum for rational mode.
template <class T>
struct CompensatedSum {
    T sum = scalar_from_int<T>(0);
    T carry = scalar_from_int<T>(0);
    void add(const T& term) {
        if constexpr (is_rational_v<T>) {
            sum += term;
        } else {
            T y = term - carry;
            T t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
    }
};

// Lower-parameter pole check: b + k = 0 for some 0 <= k < degree.
template <class T>
void check_lower_parameter(const T& b, long degree, const char* where) {
    long m;
    if (is_nonpositive_integer(b, m) && m < degree)
        throw degenerate_parameter_error(std::string(where) +
                                         ": lower parameter hits a nonpositive integer before termination");
}

}  // namespace detail

// Coefficients of the terminating 2F1(-n, b; c; z) as a degree-n polynomial in z.
template <class T>
std::vector<T> hyp2f1_poly(long n, const T& b, const T& c) {
    detail::check_lower_parameter(c, n, "hyp2f1_terminating");
    std::vector<T> coeffs(static_cast<size_t>(n) + 1);
    T term = scalar_from_int<T>(1);
    coeffs[0] = term;
    for (long k = 0; k < n; ++k) {
        T kk = scalar_from_int<T>(k);
        term *= (scalar_from_int<T>(-n) + kk) * (b + kk) / ((c + kk) * (kk + scalar_from_int<T>(1)));
        coeffs[static_cast<size_t>(k) + 1] = term;
    }
    return coeffs;
}

// Terminating 2F1(-n, b; c; z), summed in ascending index with compensation.
template <class T>
T hyp2f1_terminating(long n, const T& b, const T& c, const T& z) {
    auto coeffs = hyp2f1_poly(n, b, c);
    detail::CompensatedSum<T> acc;
    T zk = scalar_from_int<T>(1);
    for (const T& ck : coeffs) {
        acc.add(ck * zk);
        zk *= z;
    }
    return acc.sum;
}

// Nonterminating 2F1 for |z| < 1; needed only by the Pfaff identity tests.
// Terms are summed until |term| < 1e-16 |partial sum|, capped at 1e6 terms.
double hyp2f1_series(double a, double b, double c, double z);

// Terminating 3F2 at unit argument.  At least one upper parameter must be a
// nonpositive integer; a lower-parameter pole inside the sum is rejected.
template <class T>
T hyp3f2_unit(const T& a1, const T& a2, const T& a3, const T& b1, const T& b2) {
    long n = -1;
    for (const T* a : {&a1, &a2, &a3}) {
        long m;
        if (is_nonpositive_integer(*a, m) && (n < 0 || m < n)) n = m;
    }
    if (n < 0)
        throw unsupported_error("hyp3f2_unit: series does not terminate");
    detail::check_lower_parameter(b1, n, "hyp3f2_unit");
    detail::check_lower_parameter(b2, n, "hyp3f2_unit");

    detail::CompensatedSum<T> acc;
    T term = scalar_from_int<T>(1);
    acc.add(term);
    for (long k = 0; k < n; ++k) {
        T kk = scalar_from_int<T>(k);
        term *= (a1 + kk) * (a2 + kk) * (a3 + kk) /
                ((b1 + kk) * (b2 + kk) * (kk + scalar_from_int<T>(1)));
        acc.add(term);
    }
    return acc.sum;
}

// Terminating Kampe de Feriet double sum at unit arguments:
//   sum_{i=0..n} sum_{j=0..m} (c0)_{i+j}/(d0)_{i+j}
//     * (-n)_i (upper_n)_i / ((lower_n)_i i!)
//     * (-m)_j (upper_m)_j / ((lower_m)_j j!)
// where upper_n = (-n, un2) etc.; the termination degrees are n and m.
template <class T>
T kampe_unit(const T& c0, std::pair<T, T> upper_n, std::pair<T, T> upper_m,
             const T& d0, const T& lower_n, const T& lower_m, long n, long m) {
    detail::check_lower_parameter(lower_n, n, "kampe_unit");
    detail::check_lower_parameter(lower_m, m, "kampe_unit");
    detail::check_lower_parameter(d0, n + m, "kampe_unit");

    detail::CompensatedSum<T> acc;
    T row = scalar_from_int<T>(1);  // i-dependent factor at j=0
    for (long i = 0; i <= n; ++i) {
        T term = row * pochhammer(c0, i) / pochhammer(d0, i);
        acc.add(term);
        for (long j = 0; j < m; ++j) {
            T jj = scalar_from_int<T>(j);
            term *= (c0 + scalar_from_int<T>(i + j)) / (d0 + scalar_from_int<T>(i + j));
            term *= (upper_m.first + jj) * (upper_m.second + jj) /
                    ((lower_m + jj) * (jj + scalar_from_int<T>(1)));
            acc.add(term);
        }
        if (i < n) {
            T ii = scalar_from_int<T>(i);
            row *= (upper_n.first + ii) * (upper_n.second + ii) /
                   ((lower_n + ii) * (ii + scalar_from_int<T>(1)));
        }
    }
    return acc.sum;
}

}  // namespace hulthen::specfun
