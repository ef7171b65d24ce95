#include "hulthen/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hulthen/darboux.hpp"
#include "hulthen/oracle.hpp"

namespace hulthen::verify {

namespace {

class Suite {
  public:
    Suite(const ReducedParams& p, const VerifyOptions& opt) : p_(p), opt_(opt) {
        count_ = bound_state_count(p_);
        log_q_ = std::log(p_.q);
        r_max_ = oracle::default_r_max(p_);
        quad_ = {1e-10, 60, r_max_};
        max_chain_ = std::min<long>(3, count_ - 1);
    }

    VerificationReport run() {
        spectrum_checks();
        norm_checks();
        orthogonality_check();
        residual_checks();
        chain_checks();
        induction_checks();
        pfaff_pointwise_checks();
        kampe_checks();
        extended_checks();
        std::sort(report_.checks.begin(), report_.checks.end(),
                  [](const Check& a, const Check& b) { return a.name < b.name; });
        return std::move(report_);
    }

  private:
    void add(std::string name, std::string ref, double computed, double expected, double tol) {
        bool passed = std::abs(computed - expected) <= tol * std::max(1.0, std::abs(expected));
        report_.checks.push_back(
            {std::move(name), std::move(ref), computed, expected, tol, passed});
    }

    double energy_hook(long n) const { return energy(p_, n) + opt_.perturb_energy; }

    std::function<double(double)> potential(double barrier) const {
        const double v = p_.v, q = p_.q;
        return [v, q, barrier](double r) {
            double e = std::exp(-r);
            double d = 1.0 - q * e;
            return barrier * e / (d * d) - v * e / d;
        };
    }

    void spectrum_checks() {
        oracle::FDSpec fd{opt_.fd_grid, r_max_, 1e-10};
        auto eigs = oracle::fd_spectrum_extrapolated(potential(0.0), log_q_, fd);
        add("spectrum_count", "bound-state counting rule",
            static_cast<double>(eigs.size()), static_cast<double>(count_), 0.0);
        for (long n = 0; n < count_ && n < static_cast<long>(eigs.size()); ++n)
            add("spectrum_fd_n" + std::to_string(n), "closed-form energies vs FD eigensolver",
                eigs[static_cast<std::size_t>(n)], energy_hook(n), opt_.fd_tol);
    }

    // Quadrature comparisons run on unit-norm states so the absolute
    // quadrature tolerance reads directly as a relative one.
    void norm_checks() {
        for (long n = 0; n < std::min<long>(4, count_); ++n) {
            double closed = norm_integral(p_, n, n) * (1.0 + opt_.perturb_energy);
            auto psi = exppoly::scale(eigenfunction(p_, n), 1.0 / std::sqrt(closed));
            auto integrand = [&](double r) {
                double y = exppoly::evaluate(psi, r);
                return y * y;
            };
            double quad = oracle::adaptive_quad(integrand, log_q_, r_max_, quad_);
            add("norm_closed_vs_quad_n" + std::to_string(n),
                "closed-form norm integral vs adaptive quadrature", quad, 1.0, opt_.quad_tol);
        }
    }

    void orthogonality_check() {
        std::vector<ExpPoly<double>> states;
        for (long n = 0; n < count_; ++n)
            states.push_back(
                exppoly::scale(eigenfunction(p_, n), normalization_constant(p_, n)));
        auto g = oracle::gram_matrix(states, quad_);
        double worst = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                worst = std::max(worst, std::abs(g[i][j]) / std::sqrt(g[i][i] * g[j][j]));
        add("orthogonality_offdiag", "Gram matrix diagonality", worst, 0.0, 1e-8);
    }

    // Residuals run on coefficient-normalized states; the residual itself is
    // homogeneous so this only fixes the scale of the comparison.
    static ExpPoly<double> normalized(ExpPoly<double> f) {
        double m = exppoly::max_abs_coeff(f);
        return m > 0 ? exppoly::scale(f, 1.0 / m) : f;
    }

    void residual_float(const std::string& name, const ExpPoly<double>& psi, double barrier,
                        double en) {
        double r = oracle::ode_residual(normalized(psi), p_.v, p_.q, barrier, en);
        add(name, "Schrodinger residual in exact algebra", r, 0.0, 1e-10);
    }

    bool exact_params() const { return opt_.v_exact && opt_.q_exact && opt_.perturb_energy == 0.0; }

    ReducedParamsT<Rational> exact_p() const { return {*opt_.v_exact, *opt_.q_exact}; }

    void residual_checks() {
        for (long n = 0; n < count_; ++n)
            residual_float("residual_base_n" + std::to_string(n), eigenfunction(p_, n), 0.0,
                           energy_hook(n));
        if (exact_params()) {
            auto pe = exact_p();
            double worst = 0.0;
            for (long n = 0; n < count_; ++n) {
                auto poly = oracle::ode_residual_poly(eigenfunction(pe, n), pe.v, pe.q,
                                                      Rational(0), energy(pe, n));
                if (!poly.is_zero()) worst = 1.0;
            }
            add("residual_base_rational", "Schrodinger residual, exact rational mode", worst,
                0.0, 0.0);
        }
    }

    void chain_checks() {
        for (long j = 1; j <= max_chain_; ++j) {
            double barrier = darboux::chain_potential(p_, j).barrier;
            for (long n = j; n < count_; ++n) {
                auto [wr, cf] = darboux::chain_both_routes(p_, j, n);
                std::string suffix = "_j" + std::to_string(j) + "_n" + std::to_string(n);

                residual_float("residual_chain" + suffix, wr.psi, barrier, energy_hook(n));

                // constancy of the route ratio at 50 sample points
                double lo = 1e300, hi = -1e300;
                for (int k = 0; k < 50; ++k) {
                    double r = log_q_ + 0.4 + 9.6 * k / 49.0;
                    double ratio = exppoly::evaluate(wr.psi, r) / exppoly::evaluate(cf.psi, r);
                    lo = std::min(lo, ratio);
                    hi = std::max(hi, ratio);
                }
                add("route_equivalence" + suffix, "Wronskian chain vs closed-form chain",
                    (hi - lo) / std::abs(0.5 * (hi + lo)), 0.0, 1e-9);

                double closed = darboux::chain_norm(p_, j, n) * (1.0 + opt_.perturb_energy);
                auto scaled = exppoly::scale(wr.psi, 1.0 / std::sqrt(closed));
                auto integrand = [&](double r) {
                    double y = exppoly::evaluate(scaled, r);
                    return y * y;
                };
                double quad = oracle::adaptive_quad(integrand, log_q_, r_max_, quad_);
                add("chain_norm" + suffix, "chain norm product formula vs quadrature", quad,
                    1.0, 1e-6);
            }
        }
        if (exact_params() && max_chain_ >= 1) {
            auto pe = exact_p();
            double worst = 0.0;
            for (long j = 1; j <= max_chain_; ++j) {
                Rational barrier = pe.q * Rational(j) * Rational(j + 1);
                for (long n = j; n < count_; ++n) {
                    auto wr = darboux::crum_chain(pe, j, n);
                    auto poly = oracle::ode_residual_poly(wr.psi, pe.v, pe.q, barrier,
                                                          energy(pe, n));
                    if (!poly.is_zero()) worst = 1.0;
                }
            }
            add("residual_chain_rational", "chain residuals, exact rational mode", worst, 0.0,
                0.0);
        }
    }

    void induction_checks() {
        for (long j = 1; j <= std::max<long>(1, max_chain_); ++j) {
            if (j > count_) break;
            auto curv = darboux::log_wronskian_curvature(p_, j);
            double worst = 0.0;
            for (int k = 0; k < 50; ++k) {
                double r = log_q_ + 0.2 + 11.8 * k / 49.0;
                double er = std::exp(r);
                double closed = static_cast<double>(j * (j + 1)) * p_.q * er /
                                ((er - p_.q) * (er - p_.q));
                worst = std::max(worst, std::abs(curv(r) - closed) / std::abs(closed));
            }
            add("potential_induction_j" + std::to_string(j),
                "-2 (log W)'' vs j(j+1) q e^r/(e^r-q)^2", worst, 0.0, 1e-8);
        }
    }

    void pfaff_pointwise_checks() {
        // the two printed forms of the base eigenfunctions, related by Pfaff
        for (long n = 0; n < count_; ++n) {
            double w = hyp_parameter(p_, n);
            auto psi = eigenfunction(p_, n);
            double worst = 0.0;
            for (int k = 0; k < 50; ++k) {
                double r = log_q_ + 0.1 + 8.0 * k / 49.0;
                double t = p_.q * std::exp(-r);
                double alpha = 0.5 * (n + 1) - 0.5 * w;
                double alt = std::exp(alpha * r) *
                             specfun::hyp2f1_terminating<double>(n + 1, w, w - n, t);
                double direct = exppoly::evaluate(psi, r);
                worst = std::max(worst, std::abs(direct - alt) /
                                            std::max(1e-300, std::abs(alt)));
            }
            add("pfaff_pointwise_n" + std::to_string(n),
                "factored eigenfunction form vs Pfaff-transformed form", worst, 0.0, 1e-10);
        }
    }

    void kampe_checks() {
        for (long n = 0; n < std::min<long>(4, count_); ++n)
            for (long m = 0; m <= n; ++m) {
                double kampe = norm_integral_kampe(p_, n, m);
                double closed = norm_integral(p_, n, m);
                double scale = std::sqrt(norm_integral(p_, n, n) * norm_integral(p_, m, m));
                add("kampe_vs_closed_n" + std::to_string(n) + "_m" + std::to_string(m),
                    "Kampe de Feriet double sum vs closed-form overlap",
                    (kampe - closed) / scale, 0.0, 1e-9);
            }
    }

    void extended_checks() {
        for (long j = 1; j <= 2; ++j) {
            double s = extended_s_plus(static_cast<double>(j * (j + 1)) * p_.q, p_.q);
            add("extended_s_plus_j" + std::to_string(j), "indicial root at barrier j(j+1)q", s,
                static_cast<double>(j + 1), 1e-13);
            for (long n = 0; n + j < count_; ++n) {
                add("extended_energy_shift_j" + std::to_string(j) + "_n" + std::to_string(n),
                    "extended spectrum vs shifted base spectrum",
                    extended_energy(p_, s, n), energy_hook(n + j), 1e-12);
                auto psi = extended_eigenfunction(p_, s, n);
                residual_float("residual_extended_j" + std::to_string(j) + "_n" + std::to_string(n),
                               psi, static_cast<double>(j * (j + 1)) * p_.q,
                               extended_energy(p_, s, n) + opt_.perturb_energy);
            }
        }
    }

    ReducedParams p_;
    VerifyOptions opt_;
    long count_;
    long max_chain_;
    double log_q_;
    double r_max_;
    oracle::QuadSpec quad_;
    VerificationReport report_;
};

}  // namespace

VerificationReport run_suite(const ReducedParams& p, const VerifyOptions& options) {
    validate(p);
    return Suite(p, options).run();
}

}  // namespace hulthen::verify
