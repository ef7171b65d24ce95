#pragma once

#include <string>

#include "hulthen/exppoly.hpp"
#include "hulthen/specfun.hpp"

namespace hulthen {

// Physical parameterization: V(x) = -mu e^{-delta x} / (1 - q e^{-delta x}).
struct PhysicalParams {
    double mu;
    double delta;
    double q;
};

// Reduced form (delta = 1, factor-free): v = 2 mu / delta^2, energies scale
// back via E = delta^2 * E_reduced / 2 and x = r / delta.
template <class T>
struct ReducedParamsT {
    T v;
    T q;
};

using ReducedParams = ReducedParamsT<double>;

inline ReducedParams to_reduced(const PhysicalParams& p) {
    if (!(p.mu > 0) || !(p.delta > 0) || !(p.q > 0))
        throw domain_error("to_reduced: mu, delta, q must be positive");
    return {2.0 * p.mu / (p.delta * p.delta), p.q};
}

inline double to_physical_energy(const PhysicalParams& p, double reduced_energy) {
    return p.delta * p.delta * reduced_energy / 2.0;
}

template <class T>
void validate(const ReducedParamsT<T>& p) {
    if (!(to_double(p.v) > 0) || !(to_double(p.q) > 0))
        throw domain_error("reduced parameters require v > 0 and q > 0");
}

// Number of bound states: integers n >= 0 with (n+1)^2 < v/q (strict),
// i.e. ceil(sqrt(v/q)) - 1.
template <class T>
long bound_state_count(const ReducedParamsT<T>& p) {
    validate(p);
    long count = 0;
    while (true) {
        T lhs = scalar_from_int<T>((count + 1) * (count + 1)) * p.q;
        if (!(lhs < p.v)) break;
        ++count;
    }
    return count;
}

template <class T>
void require_state(const ReducedParamsT<T>& p, long n) {
    if (n < 0 || n >= bound_state_count(p))
        throw no_such_state_error("state index " + std::to_string(n) + " outside the discrete spectrum");
}

// w = v / (q (n+1)), the recurring hypergeometric parameter.
template <class T>
T hyp_parameter(const ReducedParamsT<T>& p, long n) {
    return p.v / (p.q * scalar_from_int<T>(n + 1));
}

template <class T>
T energy(const ReducedParamsT<T>& p, long n) {
    require_state(p, n);
    T half = hyp_parameter(p, n) / scalar_from_int<T>(2) -
             scalar_from_int<T>(n + 1) / scalar_from_int<T>(2);
    return -half * half;
}

// Unnormalized eigenfunction  e^{-(w/2 - (n+1)/2) r} (1 - t) 2F1(-n, w+1; w-n; t).
template <class T>
ExpPoly<T> eigenfunction(const ReducedParamsT<T>& p, long n) {
    require_state(p, n);
    T w = hyp_parameter(p, n);
    T one = scalar_from_int<T>(1);
    auto f = specfun::hyp2f1_poly<T>(n, w + one, w - scalar_from_int<T>(n));
    // multiply by (1 - t)
    std::vector<T> poly(f.size() + 1, scalar_from_int<T>(0));
    for (std::size_t k = 0; k < f.size(); ++k) {
        poly[k] += f[k];
        poly[k + 1] -= f[k];
    }
    T alpha = scalar_from_int<T>(n + 1) / scalar_from_int<T>(2) - w / scalar_from_int<T>(2);
    return ExpPoly<T>::monomial(p.q, alpha, std::move(poly));
}

// Closed-form diagonal norm integral I_nn; zero off the diagonal.
double norm_integral(const ReducedParams& p, long n, long m);

// Same quantity through the terminating Kampe de Feriet double sum.
double norm_integral_kampe(const ReducedParams& p, long n, long m);

double normalization_constant(const ReducedParams& p, long n);

struct BoundState {
    long n;
    double energy;
    ExpPoly<double> psi;  // unnormalized
    double norm_integral;
    double norm_constant;
};

BoundState bound_state(const ReducedParams& p, long n);

// Indicial root s+ = 1/2 + sqrt(barrier/q + 1/4) of the extended potential
// barrier term  barrier * e^{-r} / (1 - q e^{-r})^2.
inline double extended_s_plus(double barrier, double q) {
    if (!(barrier >= 0) || !(q > 0))
        throw domain_error("extended_s_plus: barrier >= 0 and q > 0 required");
    return 0.5 + std::sqrt(barrier / q + 0.25);
}

template <class T>
T extended_energy(const ReducedParamsT<T>& p, const T& s_plus, long n) {
    validate(p);
    T ns = scalar_from_int<T>(n) + s_plus;
    if (!(ns * ns * p.q < p.v))
        throw no_such_state_error("extended state (n + s+)^2 >= v/q");
    T half = p.v / (scalar_from_int<T>(2) * p.q * ns) - ns / scalar_from_int<T>(2);
    return -half * half;
}

// Extended-potential eigenfunction
//   e^{-(v/(2q(n+s)) - (n+s)/2) r} (1-t)^s 2F1(-n, s + v/(q(n+s)); 1-n-s + v/(q(n+s)); t)
// representable as an ExpPoly only for integer s+.
template <class T>
ExpPoly<T> extended_eigenfunction(const ReducedParamsT<T>& p, const T& s_plus, long n) {
    double rounded;
    if (!is_near_integer(s_plus, &rounded) || rounded < 1)
        throw unsupported_error(
            "extended_eigenfunction: non-integer s+; closed form is "
            "exp(-(v/(2q(n+s))-(n+s)/2) r) (1-q e^-r)^s "
            "2F1(-n, s+v/(q(n+s)); 1-n-s+v/(q(n+s)); q e^-r)");
    long s = static_cast<long>(rounded);
    extended_energy(p, s_plus, n);  // range check
    T ns = scalar_from_int<T>(n + s);
    T wp = p.v / (p.q * ns);
    auto f = specfun::hyp2f1_poly<T>(n, scalar_from_int<T>(s) + wp,
                                     scalar_from_int<T>(1 - n - s) + wp);
    // multiply by (1 - t)^s
    std::vector<T> poly = f;
    for (long pass = 0; pass < s; ++pass) {
        std::vector<T> next(poly.size() + 1, scalar_from_int<T>(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= poly[k];
        }
        poly = std::move(next);
    }
    T alpha = ns / scalar_from_int<T>(2) - wp / scalar_from_int<T>(2);
    return ExpPoly<T>::monomial(p.q, alpha, std::move(poly));
}

}  // namespace hulthen
