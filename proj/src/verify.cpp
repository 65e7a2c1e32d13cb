#include "gamma_euler/verify.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gamma_euler/formulas.hpp"
#include "gamma_euler/oracle.hpp"
#include "gamma_euler/strata.hpp"

namespace gamma_euler {

namespace {

struct Runner {
    std::ostream& log;
    VerifyReport report;

    void check(const std::string& name, bool ok) {
        ++report.checks;
        if (!ok) ++report.failures;
        log << (ok ? "  ok  " : " FAIL ") << name << "\n";
    }
};

std::vector<std::pair<std::string, GammaGroup>> gamma_corpus() {
    return {
        {"Z", GammaGroup::z_pow(1)},
        {"Z^2", GammaGroup::z_pow(2)},
        {"F2", GammaGroup::free_group(2)},
        {"Z/4", GammaGroup::presented({1, {{1, 1, 1, 1}}})},
        {"Z/2xZ/2", GammaGroup::presented({2, {{1, 1}, {2, 2}, {1, 2, 1, 2}}})},
        {"S3", GammaGroup::presented({2, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}}})},
    };
}

void verify_groups(Runner& r, const EvalOptions& opts) {
    for (const auto& [gname, gamma] : gamma_corpus()) {
        for (int m = 1; m <= 5; ++m) {
            FiniteGroup d = FiniteGroup::dihedral(m);
            auto homs = enumerate_homs(gamma, d, opts.budget);
            r.check("orbits(union-find) == orbits(Burnside) for " + gname +
                        " -> D_" + std::to_string(2 * m),
                    conjugation_orbit_count(d, homs) ==
                        burnside_orbit_count(d, homs));
        }
        for (int m = 1; m <= 6; ++m) {
            FiniteGroup c = FiniteGroup::cyclic(m);
            auto homs = enumerate_homs(gamma, c, opts.budget);
            r.check("hom count == Burnside orbits for " + gname + " -> Z/" +
                        std::to_string(m),
                    EulerValue(homs.size()) == burnside_orbit_count(c, homs));
        }
    }

    // Z^2 homs are exactly the commuting pairs among F_2 homs.
    for (int m : {3, 4}) {
        FiniteGroup d = FiniteGroup::dihedral(m);
        auto free_homs = enumerate_homs(GammaGroup::free_group(2), d, opts.budget);
        std::vector<std::vector<int>> commuting;
        for (const auto& t : free_homs)
            if (d.mul(t[0], t[1]) == d.mul(t[1], t[0])) commuting.push_back(t);
        r.check("Z^2 homs == commuting F2 homs into D_" + std::to_string(2 * m),
                commuting ==
                    enumerate_homs(GammaGroup::z_pow(2), d, opts.budget));
    }

    for (int ell = 1; ell <= 3; ++ell)
        for (int m = 1; m <= 5; ++m)
            r.check("|Hom(Z^l, Z/m)| = m^l at l=" + std::to_string(ell) +
                        " m=" + std::to_string(m),
                    chi_orbit_hom(GammaGroup::z_pow(ell),
                                  IsotropyClass::cyclic(m), opts) ==
                        pow_ev(m, static_cast<unsigned>(ell)));

    for (const auto& [gname, gamma] : gamma_corpus())
        r.check("D_2 values match Z/2 values for " + gname,
                chi_orbit_hom(gamma, IsotropyClass::dihedral(1), opts) ==
                    chi_orbit_hom(gamma, IsotropyClass::cyclic(2), opts));
}

void verify_formulas(Runner& r, const EvalOptions& opts) {
    // Dihedral closed forms against the tuple census.
    for (long long m = 1; m <= 6; ++m)
        for (int ell = 1; ell <= 3; ++ell) {
            TupleCensus c = dihedral_tuple_census(m, ell, opts.budget);
            r.check("census commuting total == closed form (m=" +
                        std::to_string(m) + ", l=" + std::to_string(ell) + ")",
                    c.commuting_total() ==
                        chi_dihedral_hom_closed(m, ell, FreeKind::abelian));
            r.check("census full total == closed form (m=" + std::to_string(m) +
                        ", l=" + std::to_string(ell) + ")",
                    c.full_total() ==
                        chi_dihedral_hom_closed(m, ell, FreeKind::free));
        }

    // O(2) symbolic census against the closed forms.
    for (int ell = 1; ell <= 8; ++ell) {
        TupleCensus c = o2_tuple_type_counts(ell);
        r.check("O(2) census commuting total, l=" + std::to_string(ell),
                c.commuting_total() == chi_o2_hom_closed(ell, FreeKind::abelian));
        if (ell >= 2)
            r.check("O(2) census full total, l=" + std::to_string(ell),
                    c.full_total() == chi_o2_hom_closed(ell, FreeKind::free));
    }

    // Specialization coherence on a small grid.
    for (int ell = 1; ell <= 3; ++ell) {
        const GammaGroup zg = GammaGroup::z_pow(ell);
        const GammaGroup fg = GammaGroup::free_group(ell);
        for (const auto& alphas :
             std::vector<std::vector<long long>>{{1}, {2}, {4}, {2, 3}, {2, 4}}) {
            for (long long d : {0, 1}) {
                O2Representation rep{alphas, d, false};
                r.check("complex closed == general (Z), l=" + std::to_string(ell),
                        chi_o2_rep_closed(rep, ell, FreeKind::abelian) ==
                            chi_o2_rep(rep, zg, opts));
                r.check("complex closed == general (F), l=" + std::to_string(ell),
                        chi_o2_rep_closed(rep, ell, FreeKind::free) ==
                            chi_o2_rep(rep, fg, opts));
                O2Representation real_rep{alphas, d, true};
                r.check("real closed == general (Z), l=" + std::to_string(ell),
                        chi_o2_real_rep_closed(real_rep, ell,
                                               FreeKind::abelian) ==
                            chi_o2_real_rep(real_rep, zg, opts));
                r.check("real closed == general (F), l=" + std::to_string(ell),
                        chi_o2_real_rep_closed(real_rep, ell, FreeKind::free) ==
                            chi_o2_real_rep(real_rep, fg, opts));
            }
        }
    }

    // d-independence (complex) and d-parity (real).
    {
        O2Representation a{{2, 3}, 0, false}, b{{2, 3}, 7, false};
        r.check("complex value ignores d",
                chi_o2_rep(a, GammaGroup::z_pow(2), opts) ==
                    chi_o2_rep(b, GammaGroup::z_pow(2), opts));
        O2Representation r0{{2, 3}, 0, true}, r2{{2, 3}, 2, true},
            r1{{2, 3}, 1, true}, r3{{2, 3}, 3, true};
        r.check("real value depends on d only through parity",
                chi_o2_real_rep(r0, GammaGroup::z_pow(2), opts) ==
                        chi_o2_real_rep(r2, GammaGroup::z_pow(2), opts) &&
                    chi_o2_real_rep(r1, GammaGroup::z_pow(2), opts) ==
                        chi_o2_real_rep(r3, GammaGroup::z_pow(2), opts));
    }

    // Non-multiplicativity witness: O(2) value differs from the product of
    // the SO(2) restriction value and the Z/2 quotient value.
    {
        O2Representation rep{{1}, 0, false};
        const GammaGroup z2 = GammaGroup::z_pow(2);
        EulerValue o2 = chi_o2_rep(rep, z2, opts);
        EulerValue s1 = chi_s1_rep(rep.underlying_circle_weights(), z2, opts);
        EulerValue q = chi_z2_quotient(z2, opts);
        r.check("chi_Gamma(O(2) x V) != chi_Gamma(S^1 x V) * chi(Hom(Gamma,Z/2))",
                o2 != s1 * q);
    }

    // Ball - sphere == representation value.
    for (const auto& [gname, gamma] : gamma_corpus()) {
        WeightVector w{{2, -3, 5}};
        r.check("ball - sphere == rep for " + gname,
                chi_s1_ball(w, gamma, opts) - chi_s1_sphere(w, gamma, opts) ==
                    chi_s1_rep(w, gamma, opts));
    }
}

void verify_strata(Runner& r, const EvalOptions& opts) {
    auto corpus = gamma_corpus();

    // Circle strata vs formula, exhaustive over n <= 2, |a| <= 3.
    for (const auto& [gname, gamma] : corpus) {
        bool ok = true;
        for (long long a = -3; a <= 3 && ok; ++a)
            for (long long b = -3; b <= 3 && ok; ++b) {
                WeightVector w{{a, b}};
                ok = evaluate_gamma_euler(stratify_s1_rep(w), gamma, opts) ==
                     chi_s1_rep(w, gamma, opts);
            }
        r.check("circle strata == formula sweep for " + gname, ok);
    }

    // O(2) strata vs theorem vs closed form, complex and real.
    for (const auto& alphas :
         std::vector<std::vector<long long>>{{1}, {2}, {2, 3}, {3, 3}}) {
        for (long long d : {0, 1, 2}) {
            O2Representation c{alphas, d, false}, re{alphas, d, true};
            const GammaGroup z2 = GammaGroup::z_pow(2);
            bool ok =
                evaluate_gamma_euler(stratify_o2_rep(c), z2, opts) ==
                    chi_o2_rep(c, z2, opts) &&
                chi_o2_rep(c, z2, opts) ==
                    chi_o2_rep_closed(c, 2, FreeKind::abelian) &&
                evaluate_gamma_euler(stratify_o2_real_rep(re), z2, opts) ==
                    chi_o2_real_rep(re, z2, opts) &&
                chi_o2_real_rep(re, z2, opts) ==
                    chi_o2_real_rep_closed(re, 2, FreeKind::abelian);
            std::ostringstream name;
            name << "O(2) strata == theorem == closed form, alphas=(";
            for (size_t i = 0; i < alphas.size(); ++i)
                name << (i ? "," : "") << alphas[i];
            name << ") d=" << d;
            r.check(name.str(), ok);
        }
    }

    // Shell value is representation independent.
    for (const auto& [gname, gamma] : corpus) {
        bool ok = true;
        for (const auto& entries : std::vector<std::vector<long long>>{
                 {-6, 2, 3}, {1, -1}, {0, 0}, {5, -7, 11, 0}, {2, 2}}) {
            WeightVector w{entries};
            ok &= evaluate_gamma_euler(stratify_s1_shell(w), gamma, opts) ==
                  chi_hom_to_circle(gamma);
        }
        r.check("shell value == chi(Hom(gamma, S^1)) for " + gname, ok);
    }

    // Localization audit: every zeroed circle stratum has a live circle rule.
    {
        bool ok = true;
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b)
                for (long long c = -2; c <= 2; ++c) {
                    WeightVector w{{a, b, c}};
                    for (const Stratum& st : stratify_s1_rep(w).strata) {
                        if (!st.zeroed_by) continue;
                        ok &= st.orbit_space_chi == 0 &&
                              st.label.index_set.size() >= 2;
                        bool all_equal = true, all_zero = true;
                        long long first =
                            w.entries[st.label.index_set.front() - 1];
                        for (int i : st.label.index_set) {
                            all_equal &= w.entries[i - 1] == first;
                            all_zero &= w.entries[i - 1] == 0;
                        }
                        ok &= !all_zero;
                        ok &= (*st.zeroed_by == ZeroRule::MixedSignCircle) ==
                              (all_equal && first != 0);
                    }
                }
        r.check("zero-rule audit over circle strata, n=3, |a| <= 2", ok);
    }
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, const HomBudget& budget,
                              std::ostream& log) {
    EvalOptions opts;
    opts.budget = budget;
    Runner r{log, {}};
    bool known = false;
    if (suite == "groups" || suite == "all") {
        verify_groups(r, opts);
        known = true;
    }
    if (suite == "formulas" || suite == "all") {
        verify_formulas(r, opts);
        known = true;
    }
    if (suite == "strata" || suite == "all") {
        verify_strata(r, opts);
        known = true;
    }
    if (!known)
        throw std::invalid_argument("unknown verify suite '" + suite +
                                    "' (groups|formulas|strata|all)");
    return r.report;
}

}  // namespace gamma_euler
