#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gamma_euler/errors.hpp"
#include "gamma_euler/formulas.hpp"
#include "gamma_euler/json_io.hpp"
#include "gamma_euler/oracle.hpp"
#include "gamma_euler/spec_text.hpp"
#include "gamma_euler/strata.hpp"
#include "gamma_euler/verify.hpp"

namespace {

using namespace gamma_euler;
using nlohmann::json;

// Exit codes: 0 success, 2 malformed/over-budget input, 3 unsupported
// gamma or group, 4 internal cross-check mismatch, 1 anything else.
constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitMismatch = 4;

std::vector<long long> parse_int_list(const std::string& text,
                                      const char* what) {
    std::vector<long long> out;
    if (text.empty()) return out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t pos = text.find(',', start);
        const std::string tok =
            text.substr(start, pos == std::string::npos ? pos : pos - start);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(std::string("bad ") + what + " entry: '" + tok +
                             "'");
        out.push_back(v);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(json record, const Timer& timer) {
    record["timing_ms"] = timer.ms();
    std::cout << record.dump(2) << "\n";
}

// "S1" | "O2" | "cyclic:<m>" | "dihedral:<m>"; unknown alphanumeric names
// are reported as unsupported (exit 3), malformed parameters as input
// errors (exit 2).
IsotropyClass parse_group_spec(const std::string& text, bool allow_circle) {
    const auto param = [&](size_t at) {
        const std::string tok = text.substr(at);
        long long m = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), m);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || m < 0)
            throw ParseError("bad group parameter: '" + tok + "'");
        return m;
    };
    if (allow_circle && text == "S1") return IsotropyClass::circle_so2();
    if (text == "O2") return IsotropyClass::full_o2();
    if (text.rfind("cyclic:", 0) == 0) {
        const long long m = param(7);
        if (m < 1) throw ParseError("cyclic:<m> needs m >= 1");
        return IsotropyClass::cyclic(m);
    }
    if (text.rfind("dihedral:", 0) == 0) {
        const long long m = param(9);
        if (m < 1) throw ParseError("dihedral:<m> needs m >= 1");
        return IsotropyClass::dihedral(m);
    }
    throw UnsupportedGamma("unsupported group '" + text + "'");
}

struct S1Args {
    std::string weights, gamma, subset;
    std::optional<long long> real_dim;
    bool with_strata = false;
};

int run_s1_rep(const S1Args& a, const EvalOptions& opts) {
    Timer timer;
    WeightVector w{parse_int_list(a.weights, "weight")};
    GammaGroup gamma = parse_gamma_spec(a.gamma);

    json record;
    record["command"] = "s1-rep";
    record["inputs"] = {{"weights", w.entries},
                        {"gamma", print_gamma_spec(gamma)},
                        {"subset", a.subset.empty() ? "none" : a.subset},
                        {"real_dim", a.real_dim ? json(*a.real_dim) : json()}};

    if (a.real_dim && !a.subset.empty())
        throw ParseError("--real applies to the representation itself, not to "
                         "--subset spaces");

    EulerValue value;
    if (a.subset == "sphere") {
        value = chi_s1_sphere(w, gamma, opts);
    } else if (a.subset == "ball") {
        value = chi_s1_ball(w, gamma, opts);
    } else if (a.subset == "shell") {
        Stratification s = stratify_s1_shell(w);
        value = evaluate_gamma_euler(s, gamma, opts);
        // The shell value has a representation-independent closed form;
        // the stratification must reproduce it.
        EulerValue expected = chi_hom_to_circle(gamma);
        if (value != expected)
            throw CrossCheckMismatch("shell strata sum " + value.str() +
                                     " != chi(Hom(gamma, S^1)) = " +
                                     expected.str());
        if (a.with_strata) record["strata"] = stratification_to_json(s);
    } else if (a.subset.empty()) {
        if (a.real_dim) {
            if (a.with_strata)
                throw ParseError(
                    "--strata is not available for the real circle case");
            value = chi_s1_rep_real(w, *a.real_dim, gamma, opts);
        } else {
            value = chi_s1_rep(w, gamma, opts);
            if (a.with_strata) {
                Stratification s = stratify_s1_rep(w);
                EulerValue strata_value = evaluate_gamma_euler(s, gamma, opts);
                if (strata_value != value)
                    throw CrossCheckMismatch(
                        "strata sum " + strata_value.str() +
                        " != formula value " + value.str());
                record["strata"] = stratification_to_json(s);
            }
        }
    } else {
        throw ParseError("unknown --subset '" + a.subset +
                         "' (sphere|ball|shell)");
    }

    record["value"] = value.str();
    emit(std::move(record), timer);
    return kExitOk;
}

struct O2Args {
    std::string alphas, gamma;
    long long d = 0;
    bool real_points = false;
    bool with_strata = false;
};

int run_o2_rep(const O2Args& a, const EvalOptions& opts) {
    Timer timer;
    O2Representation rep;
    rep.alphas = parse_int_list(a.alphas, "alpha");
    rep.det_multiplicity = a.d;
    rep.real_points = a.real_points;
    for (long long v : rep.alphas)
        if (v < 1) throw ParseError("alphas must be >= 1");
    if (a.d < 0) throw ParseError("-d must be >= 0");
    GammaGroup gamma = parse_gamma_spec(a.gamma);

    json record;
    record["command"] = "o2-rep";
    record["inputs"] = {{"alphas", rep.alphas},
                        {"det_multiplicity", rep.det_multiplicity},
                        {"real", rep.real_points},
                        {"gamma", print_gamma_spec(gamma)}};

    EulerValue value = rep.real_points ? chi_o2_real_rep(rep, gamma, opts)
                                       : chi_o2_rep(rep, gamma, opts);
    if (a.with_strata) {
        Stratification s = rep.real_points ? stratify_o2_real_rep(rep)
                                           : stratify_o2_rep(rep);
        EulerValue strata_value = evaluate_gamma_euler(s, gamma, opts);
        if (strata_value != value)
            throw CrossCheckMismatch("strata sum " + strata_value.str() +
                                     " != formula value " + value.str());
        record["strata"] = stratification_to_json(s);
    }

    record["value"] = value.str();
    emit(std::move(record), timer);
    return kExitOk;
}

int run_symplectic(const std::string& group, const std::string& gamma_text,
                   const EvalOptions& opts) {
    Timer timer;
    IsotropyClass g = parse_group_spec(group, /*allow_circle=*/true);
    GammaGroup gamma = parse_gamma_spec(gamma_text);

    json record;
    record["command"] = "symplectic";
    record["inputs"] = {{"group", group}, {"gamma", print_gamma_spec(gamma)}};
    record["value"] = chi_symplectic_quotient(g, gamma, opts).str();
    emit(std::move(record), timer);
    return kExitOk;
}

int run_hom_orbits(const std::string& target, const std::string& gamma_text,
                   bool with_oracle, const EvalOptions& opts) {
    Timer timer;
    IsotropyClass cls = parse_group_spec(target, /*allow_circle=*/false);
    GammaGroup gamma = parse_gamma_spec(gamma_text);

    json record;
    record["command"] = "hom-orbits";
    record["inputs"] = {{"target", target},
                        {"gamma", print_gamma_spec(gamma)},
                        {"oracle", with_oracle}};

    EulerValue value = chi_orbit_hom(gamma, cls, opts);
    if (with_oracle) {
        EulerValue oracle_value;
        if (cls.kind() == IsotropyClass::Kind::FullO2) {
            // Symbolic census; only Z^l / F_l reach this point.
            GammaGroup c = gamma.canonical();
            TupleCensus census = o2_tuple_type_counts(c.generator_count());
            oracle_value = c.kind() == GammaGroup::Kind::ZPow
                               ? census.commuting_total()
                               : census.full_total();
        } else {
            FiniteGroup h =
                cls.kind() == IsotropyClass::Kind::Cyclic
                    ? FiniteGroup::cyclic(
                          static_cast<int>(cls.order_parameter()))
                    : FiniteGroup::dihedral(
                          static_cast<int>(cls.order_parameter()));
            oracle_value =
                burnside_orbit_count(h, enumerate_homs(gamma, h, opts.budget));
        }
        if (oracle_value != value)
            throw CrossCheckMismatch("oracle value " + oracle_value.str() +
                                     " != production value " + value.str());
        record["oracle_value"] = oracle_value.str();
    }

    record["value"] = value.str();
    emit(std::move(record), timer);
    return kExitOk;
}

int run_verify(const std::string& suite, const EvalOptions& opts) {
    Timer timer;
    VerifyReport report = run_verify_suite(suite, opts.budget, std::cerr);

    json record;
    record["command"] = "verify";
    record["inputs"] = {{"suite", suite}};
    record["checks"] = report.checks;
    record["failures"] = report.failures;
    record["value"] = report.ok() ? "ok" : "failed";
    emit(std::move(record), timer);
    return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler characteristics of circle and O(2) "
                 "representation groupoids"};
    app.require_subcommand(1);

    S1Args s1;
    CLI::App* s1_cmd =
        app.add_subcommand("s1-rep", "circle representation invariants");
    s1_cmd->add_option("-w,--weights", s1.weights,
                       "comma-separated integer weights");
    s1_cmd->add_option("-g,--gamma", s1.gamma, "gamma spec (Z^l, Fl, fp:...)")
        ->required();
    long long s1_real_dim = 0;
    CLI::Option* s1_real =
        s1_cmd->add_option("--real", s1_real_dim,
                           "real form with a d-dimensional fixed summand");
    s1_cmd->add_option("--subset", s1.subset, "sphere|ball|shell");
    s1_cmd->add_flag("--strata", s1.with_strata,
                     "emit the stratification and cross-check the value");

    O2Args o2;
    CLI::App* o2_cmd =
        app.add_subcommand("o2-rep", "O(2) representation invariants");
    o2_cmd->add_option("-a,--alphas", o2.alphas,
                       "comma-separated rotation weights (each >= 1)");
    o2_cmd->add_option("-d,--det", o2.d, "determinant character multiplicity");
    o2_cmd->add_option("-g,--gamma", o2.gamma, "gamma spec")->required();
    o2_cmd->add_flag("--real", o2.real_points, "real points of the rep");
    o2_cmd->add_flag("--strata", o2.with_strata,
                     "emit the stratification and cross-check the value");

    std::string sym_group, sym_gamma;
    CLI::App* sym_cmd =
        app.add_subcommand("symplectic", "shell quotient invariants");
    sym_cmd->add_option("-G,--group", sym_group,
                        "S1|O2|cyclic:<m>|dihedral:<m>")
        ->required();
    sym_cmd->add_option("-g,--gamma", sym_gamma, "gamma spec")->required();

    std::string hom_target, hom_gamma;
    bool hom_oracle = false;
    CLI::App* hom_cmd = app.add_subcommand(
        "hom-orbits", "chi of the conjugation quotient of Hom(gamma, H)");
    hom_cmd->add_option("-t,--target", hom_target, "cyclic:<m>|dihedral:<m>|O2")
        ->required();
    hom_cmd->add_option("-g,--gamma", hom_gamma, "gamma spec")->required();
    hom_cmd->add_flag("--oracle", hom_oracle,
                      "recompute through the independent census/Burnside path");

    std::string verify_suite = "all";
    long long verify_budget = 0;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the built-in self-check corpora");
    verify_cmd->add_option("--suite", verify_suite, "groups|formulas|strata|all");
    verify_cmd->add_option("--budget", verify_budget,
                           "enumeration budget override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    EvalOptions opts;
    opts.budget = HomBudget::from_env();
    if (verify_cmd->parsed() && verify_budget > 0)
        opts.budget.max_candidates = verify_budget;

    try {
        if (s1_cmd->parsed()) {
            if (s1_real->count()) s1.real_dim = s1_real_dim;
            return run_s1_rep(s1, opts);
        }
        if (o2_cmd->parsed()) return run_o2_rep(o2, opts);
        if (sym_cmd->parsed()) return run_symplectic(sym_group, sym_gamma, opts);
        if (hom_cmd->parsed())
            return run_hom_orbits(hom_target, hom_gamma, hom_oracle, opts);
        if (verify_cmd->parsed()) return run_verify(verify_suite, opts);
    } catch (const CrossCheckMismatch& e) {
        std::cerr << "cross-check mismatch: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const UnsupportedGamma& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitInput;
    } catch (const SubsetBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitInput;
    } catch (const RejectsZeroWeight& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NonIntegralBurnside& e) {
        std::cerr << "cross-check mismatch: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}
