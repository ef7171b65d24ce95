#include "hulthen/specfun.hpp"

#include <array>
#include <cctype>
#include <cmath>

namespace hulthen {

std::optional<Rational> parse_rational(const std::string& text) {
    // mpq set_str accepts "num/den" and plain integers; anything else
    // (decimals, exponents, stray characters) is rejected.
    if (text.empty()) return std::nullopt;
    for (char ch : text)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            return std::nullopt;
    Rational r;
    if (r.set_str(text, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

namespace specfun {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,    676.5203681218851,    -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,  12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2 pi)/2

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw domain_error("log_gamma: argument must be positive");
    // Shift small arguments up via ln Gamma(x) = ln Gamma(x+1) - ln x so the
    // Lanczos core always runs at x >= 1.5 where it holds full precision.
    double shift = 0.0;
    while (x < 1.5) {
        shift -= std::log(x);
        x += 1.0;
    }
    double z = x - 1.0;
    double acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    double t = z + kLanczosG + 0.5;
    return shift + kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double hyp2f1_series(double a, double b, double c, double z) {
    if (std::abs(z) >= 1.0)
        throw unsupported_error("hyp2f1_series: |z| must be < 1");
    detail::CompensatedSum<double> acc;
    double term = 1.0;
    acc.add(term);
    constexpr long kMaxTerms = 1000000;
    for (long k = 0; k < kMaxTerms; ++k) {
        double ck = c + static_cast<double>(k);
        if (ck == 0.0)
            throw degenerate_parameter_error("hyp2f1_series: lower-parameter pole");
        term *= (a + k) * (b + k) / (ck * (k + 1.0)) * z;
        acc.add(term);
        if (std::abs(term) < 1e-16 * std::abs(acc.sum)) return acc.sum;
    }
    throw convergence_failure_error("hyp2f1_series: term cap reached", acc.sum);
}

}  // namespace specfun
}  // namespace hulthen
