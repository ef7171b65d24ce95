#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "hulthen/exppoly.hpp"
#include "hulthen/verify.hpp"

namespace hulthen {

// Shared formatting rule for CSV output: 17 significant digits, enough to
// round-trip a double exactly.
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

template <class T>
nlohmann::json exppoly_to_json(const ExpPoly<T>& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : t.poly) coeffs.push_back(to_double(c));
        terms.push_back({{"alpha", to_double(t.alpha)}, {"coeffs", coeffs}});
    }
    return {{"q", to_double(f.q)}, {"terms", terms}};
}

inline ExpPoly<double> exppoly_from_json(const nlohmann::json& j) {
    ExpPoly<double> f;
    f.q = j.at("q").get<double>();
    for (const auto& t : j.at("terms")) {
        typename ExpPoly<double>::Term term;
        term.alpha = t.at("alpha").get<double>();
        for (const auto& c : t.at("coeffs")) term.poly.push_back(c.get<double>());
        f.terms.push_back(std::move(term));
    }
    f.canonicalize();
    return f;
}

inline nlohmann::json report_to_json(const verify::VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"target_ref", c.target_ref},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed}});
    return {{"checks", checks}, {"all_passed", report.all_passed()}};
}

}  // namespace hulthen
