#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hulthen/hulthen.hpp"

namespace hulthen::verify {

struct Check {
    std::string name;
    std::string target_ref;  // which closed form / identity is being checked
    double computed;
    double expected;
    double tolerance;
    bool passed;  // |computed - expected| <= tolerance * max(1, |expected|)
};

struct VerificationReport {
    std::vector<Check> checks;  // sorted by name
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

struct VerifyOptions {
    long fd_grid = 1 << 15;       // interior nodes of the coarse FD grid
    double quad_tol = 1e-8;       // quadrature-vs-closed-form comparisons
    double fd_tol = 1e-6;         // FD-vs-analytic energies (discretization limited)
    double perturb_energy = 0.0;  // test hook: shifts every closed-form energy
    // exact rational parameters, when the inputs parse as such
    std::optional<Rational> v_exact;
    std::optional<Rational> q_exact;
};

// Runs the full oracle suite for one (v, q): FD spectrum agreement, closed
// norms vs quadrature, orthogonality, ODE residuals (base, extended, chains),
// route equivalence, potential induction, Kampe de Feriet cross-checks.
VerificationReport run_suite(const ReducedParams& p, const VerifyOptions& options);

}  // namespace hulthen::verify
