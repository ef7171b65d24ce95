#pragma once

#include <functional>
#include <vector>

#include "hulthen/exppoly.hpp"
#include "hulthen/hulthen.hpp"

namespace hulthen::oracle {

struct QuadSpec {
    double tol = 1e-10;   // target absolute error
    int max_depth = 60;
    double r_max = 0.0;   // truncation point for half-line integrals
};

struct FDSpec {
    long grid_points = 4096;  // interior nodes of the coarse grid
    double r_max = 0.0;
    double eig_tol = 1e-9;    // absolute bisection tolerance
};

// Adaptive bisection built on a fifth-order local Simpson rule.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     const QuadSpec& spec);

// Truncation point log q + max(60, 40/sqrt(-E_shallowest)); puts the tail of
// the slowest-decaying state below 1e-12.
double default_r_max(const ReducedParams& p);

// All negative eigenvalues of -d^2/dr^2 + V on (log_q, r_max) with Dirichlet
// ends, three-point discretization, Sturm-sequence bisection.
std::vector<double> fd_spectrum(const std::function<double(double)>& potential,
                                double log_q, const FDSpec& spec);

// Richardson extrapolation over the N and 2N grids.
std::vector<double> fd_spectrum_extrapolated(const std::function<double(double)>& potential,
                                             double log_q, const FDSpec& spec);

// Residual of (-psi'' + V psi - E psi) (1-t)^2 as an exact ExpPoly, with
// V = barrier e^{-r}/(1-q e^{-r})^2 - v e^{-r}/(1-q e^{-r}).  The multiplied
// potential is polynomial in t:  V (1-t)^2 = (barrier/q) t - (v/q) t (1-t).
template <class T>
ExpPoly<T> ode_residual_poly(const ExpPoly<T>& psi, const T& v, const T& q,
                             const T& barrier, const T& energy) {
    using namespace exppoly;
    ExpPoly<T> one_minus_t_sq =
        ExpPoly<T>::monomial(psi.q, scalar_from_int<T>(0),
                             {scalar_from_int<T>(1), scalar_from_int<T>(-2), scalar_from_int<T>(1)});
    // (barrier/q) t - (v/q) t + (v/q) t^2
    ExpPoly<T> v_masked = ExpPoly<T>::monomial(
        psi.q, scalar_from_int<T>(0),
        {scalar_from_int<T>(0), (barrier - v) / q, v / q});
    ExpPoly<T> psi2 = differentiate(differentiate(psi));
    ExpPoly<T> r = mul(sub(scale(psi2, scalar_from_int<T>(-1)), scale(psi, energy)), one_minus_t_sq);
    return add(r, mul(v_masked, psi));
}

// Maximum absolute residual coefficient; exactly zero in rational mode for
// true eigenfunctions.
template <class T>
double ode_residual(const ExpPoly<T>& psi, const T& v, const T& q,
                    const T& barrier, const T& energy) {
    return exppoly::max_abs_coeff(ode_residual_poly(psi, v, q, barrier, energy));
}

// Pairwise quadrature inner products over [log q, r_max].
std::vector<std::vector<double>> gram_matrix(const std::vector<ExpPoly<double>>& states,
                                             const QuadSpec& spec);

}  // namespace hulthen::oracle
