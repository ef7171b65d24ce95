#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "hulthen/errors.hpp"

namespace hulthen {

// Exact rational scalar used by the zero-tolerance evaluation mode.
using Rational = mpq_class;

template <class T>
inline constexpr bool is_rational_v = std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

template <class T>
T scalar_from_int(long n) {
    if constexpr (is_rational_v<T>)
        return Rational(n);
    else
        return static_cast<T>(n);
}

// Parses "12", "-3", "3/2", "17/10" as an exact rational.  Decimal or
// otherwise non-rational text yields nullopt (forcing float mode).
std::optional<Rational> parse_rational(const std::string& text);

// Integer detection used for hypergeometric termination: |a - round(a)| <= 1e-9.
inline bool is_near_integer(double a, double* rounded = nullptr) {
    double r = std::round(a);
    if (rounded) *rounded = r;
    return std::abs(a - r) <= 1e-9;
}

inline bool is_near_integer(const Rational& a, double* rounded = nullptr) {
    bool integral = a.get_den() == 1;
    if (rounded) *rounded = integral ? a.get_num().get_d() : std::round(to_double(a));
    return integral;
}

// True when a is (within detection tolerance) a nonpositive integer; the
// magnitude of that integer is written to degree.
template <class T>
bool is_nonpositive_integer(const T& a, long& degree) {
    double r;
    if (!is_near_integer(a, &r)) return false;
    if (r > 0) return false;
    degree = static_cast<long>(-r);
    return true;
}

}  // namespace hulthen
