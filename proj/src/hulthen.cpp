#include "hulthen/hulthen.hpp"

#include <cmath>

namespace hulthen {

using specfun::hyp3f2_unit;
using specfun::log_gamma;
using specfun::pochhammer;

// Diagonal norm integral, reduced units:
//   I_nn = 2 q^{n+1-w} Gamma(w-n-1)/Gamma(w-n+2)
//          * [ (first bracket term, n >= 1 only) + 3F2(-n, w+1, w-n-1; w-n, w-n+2; 1) ]
// with w = v/(q(n+1)).  The first bracket term originates from the i = n
// term of a sum running i = 1..n and therefore does not exist for n = 0;
// for n = 0 the bracket is the second 3F2 alone (= 1).
double norm_integral(const ReducedParams& p, long n, long m) {
    require_state(p, n);
    require_state(p, m);
    if (n != m) return 0.0;  // orthogonality, verified independently by quadrature

    const double w = hyp_parameter(p, n);
    if (!(w - n - 1 > 0))
        throw no_such_state_error("norm_integral: state at or above threshold");

    // Gamma(w-n-1)/Gamma(w-n+2) is a plain rational ratio.
    const double gamma_ratio = 1.0 / ((w - n - 1) * (w - n) * (w - n + 1));
    const double prefactor = 2.0 * std::pow(p.q, n + 1 - w) * gamma_ratio;

    double bracket = hyp3f2_unit<double>(-n, w + 1, w - n - 1, w - n, w - n + 2);
    if (n >= 1) {
        const double np1 = static_cast<double>(n + 1);
        const double ratio = p.q * np1 * (p.v - p.q * np1 * np1) * pochhammer(w + 1, n) /
                             ((p.v - p.q * np1) * (2 * p.q * np1 + p.v) * pochhammer(-w - 1, n));
        bracket += ratio * hyp3f2_unit<double>(1 - n, w + 1, w, w + 3, w - n);
    }
    const double result = prefactor * bracket;
    if (!(result > 0))
        throw theory_violation_error("norm_integral: nonpositive closed form");
    return result;
}

// The same overlap through the terminating Kampe de Feriet double sum;
// reduces exactly to the single-sum form after the Gamma-function step.
double norm_integral_kampe(const ReducedParams& p, long n, long m) {
    require_state(p, n);
    require_state(p, m);
    const double wn = hyp_parameter(p, n);
    const double wm = hyp_parameter(p, m);
    const double g = p.v * (m + n + 2) / (2.0 * p.q * (m + 1) * (n + 1));
    const double c0 = g - 0.5 * (m + n) - 1.0;
    const double d0 = c0 + 3.0;
    if (!(c0 > 0))
        throw no_such_state_error("norm_integral_kampe: Gamma pole in prefactor");
    const double prefactor = 2.0 * std::pow(p.q, 1.0 + 0.5 * (m + n) - g) /
                             (c0 * (c0 + 1.0) * (c0 + 2.0));
    const double sum = specfun::kampe_unit<double>(
        c0, {static_cast<double>(-n), wn + 1}, {static_cast<double>(-m), wm + 1},
        d0, wn - n, wm - m, n, m);
    return prefactor * sum;
}

double normalization_constant(const ReducedParams& p, long n) {
    return 1.0 / std::sqrt(norm_integral(p, n, n));
}

BoundState bound_state(const ReducedParams& p, long n) {
    BoundState s;
    s.n = n;
    s.energy = energy(p, n);
    s.psi = eigenfunction(p, n);
    s.norm_integral = norm_integral(p, n, n);
    s.norm_constant = 1.0 / std::sqrt(s.norm_integral);
    return s;
}

}  // namespace hulthen
