// hulthen-lab: closed-form spectra, states and Darboux chains of the deformed
// Hulthen potential, with a self-contained numerical verification suite.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hulthen/darboux.hpp"
#include "hulthen/hulthen.hpp"
#include "hulthen/oracle.hpp"
#include "hulthen/serialize.hpp"
#include "hulthen/verify.hpp"

namespace {

using nlohmann::json;
using namespace hulthen;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitEmptyResult = 3;
constexpr int kExitTheoryViolation = 4;

struct Options {
    std::string v_text;
    std::string q_text;
    double mu = 0.0;
    double delta = 0.0;
    bool physical = false;
    std::string n_text = "all";
    long j = 0;
    double tol = 1e-8;
    std::string format = "json";
    bool rational = false;
    double perturb_energy = 0.0;
};

struct Resolved {
    ReducedParams p;
    std::optional<PhysicalParams> phys;
    std::optional<Rational> v_exact;
    std::optional<Rational> q_exact;
};

Resolved resolve_params(const Options& opt) {
    Resolved r;
    if (opt.physical) {
        if (opt.rational)
            throw usage_error("rational mode requires reduced (v, q) input");
        auto q = parse_rational(opt.q_text);
        double qd = q ? to_double(*q) : std::strtod(opt.q_text.c_str(), nullptr);
        r.phys = PhysicalParams{opt.mu, opt.delta, qd};
        r.p = to_reduced(*r.phys);
        return r;
    }
    r.v_exact = parse_rational(opt.v_text);
    r.q_exact = parse_rational(opt.q_text);
    double v = r.v_exact ? to_double(*r.v_exact) : std::strtod(opt.v_text.c_str(), nullptr);
    double q = r.q_exact ? to_double(*r.q_exact) : std::strtod(opt.q_text.c_str(), nullptr);
    if (opt.rational && (!r.v_exact || !r.q_exact))
        throw usage_error("rational mode requires v and q to parse as exact rationals");
    if (!opt.rational) {
        r.v_exact.reset();
        r.q_exact.reset();
    }
    r.p = ReducedParams{v, q};
    validate(r.p);
    return r;
}

std::vector<long> resolve_indices(const Options& opt, long count, long minimum) {
    std::vector<long> out;
    if (opt.n_text == "all") {
        for (long n = minimum; n < count; ++n) out.push_back(n);
    } else {
        out.push_back(std::strtol(opt.n_text.c_str(), nullptr, 10));
    }
    if (out.empty()) throw no_such_state_error("no states in range");
    return out;
}

long max_chain_depth() {
    if (const char* env = std::getenv("HULTHEN_MAX_CHAIN")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 0) return cap;
    }
    return 4;
}

void emit_csv_kv(std::ostream& os, const json& j, const std::string& prefix) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            emit_csv_kv(os, *it, key);
        } else if (it->is_number()) {
            os << key << "," << format_number(it->get<double>()) << "\n";
        } else if (!it->is_array()) {
            os << key << "," << it->dump() << "\n";
        }
    }
}

int cmd_spectrum(const Options& opt) {
    Resolved r = resolve_params(opt);
    long count = bound_state_count(r.p);
    if (count == 0) {
        std::cerr << "no bound states for v/q = " << r.p.v / r.p.q << "\n";
        return kExitEmptyResult;
    }
    json out;
    out["params"] = {{"v", r.p.v}, {"q", r.p.q}};
    if (r.phys) {
        out["params"]["mu"] = r.phys->mu;
        out["params"]["delta"] = r.phys->delta;
    }
    out["states"] = json::array();
    for (long n = 0; n < count; ++n) {
        json row = {{"n", n}, {"energy_reduced", energy(r.p, n)}};
        if (r.phys) row["energy_physical"] = to_physical_energy(*r.phys, energy(r.p, n));
        out["states"].push_back(row);
    }
    if (opt.format == "csv") {
        std::cout << "n,energy_reduced" << (r.phys ? ",energy_physical" : "") << "\n";
        for (const auto& row : out["states"]) {
            std::cout << row["n"].get<long>() << ","
                      << format_number(row["energy_reduced"].get<double>());
            if (r.phys) std::cout << "," << format_number(row["energy_physical"].get<double>());
            std::cout << "\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

json state_record(const Resolved& r, long n) {
    BoundState s = bound_state(r.p, n);
    ExpPoly<double> psi = s.psi;
    if (r.v_exact && r.q_exact) {
        ReducedParamsT<Rational> pe{*r.v_exact, *r.q_exact};
        psi = exppoly::to_float(eigenfunction(pe, n));
    }
    json rec = {{"n", n},
                {"energy", s.energy},
                {"norm_constant", s.norm_constant},
                {"exppoly", exppoly_to_json(psi)}};
    json samples = json::array();
    const double log_q = std::log(r.p.q);
    for (int i = 0; i <= 32; ++i) {
        double rr = log_q + 16.0 * i / 32.0;
        samples.push_back({{"r", rr}, {"value", s.norm_constant * exppoly::evaluate(psi, rr)}});
    }
    rec["samples"] = samples;
    return rec;
}

int cmd_state(const Options& opt) {
    Resolved r = resolve_params(opt);
    long count = bound_state_count(r.p);
    auto indices = resolve_indices(opt, count, 0);
    json out = json::array();
    for (long n : indices) out.push_back(state_record(r, n));
    if (opt.format == "csv") {
        std::cout << "n,r,value\n";
        for (const auto& rec : out)
            for (const auto& s : rec["samples"])
                std::cout << rec["n"].get<long>() << "," << format_number(s["r"].get<double>())
                          << "," << format_number(s["value"].get<double>()) << "\n";
    } else {
        std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    }
    return kExitOk;
}

json chain_record(const Resolved& r, long j, long n) {
    json rec;
    auto barrier = darboux::chain_potential(r.p, j).barrier;
    double proportionality = 1.0;
    json route_wr, route_cf;
    if (r.v_exact && r.q_exact) {
        ReducedParamsT<Rational> pe{*r.v_exact, *r.q_exact};
        auto [wr, cf] = darboux::chain_both_routes(pe, j, n);
        proportionality = wr.proportionality;
        route_wr = exppoly_to_json(wr.psi);
        route_cf = exppoly_to_json(cf.psi);
    } else {
        auto [wr, cf] = darboux::chain_both_routes(r.p, j, n);
        proportionality = wr.proportionality;
        route_wr = exppoly_to_json(wr.psi);
        route_cf = exppoly_to_json(cf.psi);
    }
    auto readings = darboux::chain_norm_readings(r.p, j, n);
    rec = {{"j", j},
           {"n", n},
           {"barrier", barrier},
           {"routes", {{"wronskian", route_wr}, {"closed_form", route_cf}}},
           {"proportionality", proportionality},
           {"norm_eq50", darboux::chain_norm(r.p, j, n)},
           {"norm_eq82", {{"reading_a", readings.reading_a}, {"reading_b", readings.reading_b}}}};
    return rec;
}

int cmd_chain(const Options& opt) {
    Resolved r = resolve_params(opt);
    if (opt.j > max_chain_depth())
        throw no_such_state_error("chain depth exceeds HULTHEN_MAX_CHAIN");
    long count = bound_state_count(r.p);
    auto indices = resolve_indices(opt, count, opt.j);
    json out = json::array();
    for (long n : indices) out.push_back(chain_record(r, opt.j, n));
    if (opt.format == "csv") {
        for (const auto& rec : out) emit_csv_kv(std::cout, rec, "");
    } else {
        std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    Resolved r = resolve_params(opt);
    verify::VerifyOptions vo;
    vo.quad_tol = opt.tol;
    vo.perturb_energy = opt.perturb_energy;
    vo.v_exact = r.v_exact;
    vo.q_exact = r.q_exact;
    auto report = verify::run_suite(r.p, vo);
    if (opt.format == "csv") {
        std::cout << "name,target_ref,computed,expected,tolerance,passed\n";
        for (const auto& c : report.checks)
            std::cout << c.name << ",\"" << c.target_ref << "\"," << format_number(c.computed)
                      << "," << format_number(c.expected) << "," << format_number(c.tolerance)
                      << "," << (c.passed ? "true" : "false") << "\n";
    } else {
        std::cout << report_to_json(report).dump(2) << "\n";
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformed Hulthen potential: closed-form spectra, eigenfunctions and "
                 "Crum-Darboux chains, with numerical verification"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    CLI::App* active = nullptr;
    for (const char* name : {"spectrum", "state", "chain", "verify"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--v", opt.v_text, "coupling v of the reduced problem");
        sub->add_option("--mu", opt.mu, "physical coupling mu");
        sub->add_option("--delta", opt.delta, "screening parameter delta");
        sub->add_option("--q", opt.q_text, "deformation parameter q")->required();
        sub->add_option("--n", opt.n_text, "state index or 'all'");
        sub->add_option("--j", opt.j, "Darboux chain depth");
        sub->add_option("--tol", opt.tol, "comparison tolerance");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--rational", opt.rational, "exact rational arithmetic mode");
        sub->add_option("--perturb-energy", opt.perturb_energy,
                        "test hook: shift closed-form energies before verification");
        sub->callback([&command, &active, name, sub]() {
            command = name;
            active = sub;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        opt.physical = !active->get_option("--mu")->empty();
        if (opt.physical && !active->get_option("--v")->empty())
            throw usage_error("give either --v or --mu/--delta, not both");
        if (!opt.physical && active->get_option("--v")->empty())
            throw usage_error("either --v or --mu/--delta is required");
        if (opt.physical && active->get_option("--delta")->empty())
            throw usage_error("--mu requires --delta");

        if (command == "spectrum") return cmd_spectrum(opt);
        if (command == "state") return cmd_state(opt);
        if (command == "chain") return cmd_chain(opt);
        return cmd_verify(opt);
    } catch (const theory_violation_error& e) {
        std::cerr << "theory violation: " << e.what() << "\n";
        return kExitTheoryViolation;
    } catch (const no_such_state_error& e) {
        std::cerr << e.what() << "\n";
        return kExitEmptyResult;
    } catch (const convergence_failure_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitTheoryViolation;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
