#pragma once

#include <stdexcept>
#include <string>

namespace hulthen {

// Argument outside the mathematical domain of an operation (poles, x <= 0, r < log q, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed usage of the library surface (mismatched q, bad configuration).
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// A state index outside the discrete spectrum, or an empty result.
struct no_such_state_error : std::runtime_error {
    explicit no_such_state_error(const std::string& what) : std::runtime_error(what) {}
};

// Hypergeometric lower parameter hits a nonpositive integer before termination.
struct degenerate_parameter_error : domain_error {
    explicit degenerate_parameter_error(const std::string& what) : domain_error(what) {}
};

// Requested evaluation mode cannot represent the object (e.g. non-integer s+).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// An identity the theory guarantees failed to hold (inexact Wronskian division,
// seed with a node).  Always indicates a bug or broken precondition, never user input.
struct theory_violation_error : std::runtime_error {
    explicit theory_violation_error(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature ran out of depth; carries the best estimate so far.
struct convergence_failure_error : std::runtime_error {
    double best_estimate;
    convergence_failure_error(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
};

}  // namespace hulthen
