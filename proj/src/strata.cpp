#include "gamma_euler/strata.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "gamma_euler/errors.hpp"

namespace gamma_euler {

std::string stratum_kind_tag(StratumKind k) {
    switch (k) {
        case StratumKind::Origin: return "origin";
        case StratumKind::S1Piece: return "s1-piece";
        case StratumKind::O2Xi: return "o2-xi";
        case StratumKind::O2XStar: return "o2-x-star";
        case StratumKind::O2XCross: return "o2-x-cross";
        case StratumKind::O2XPlain: return "o2-x-plain";
        case StratumKind::O2YJ: return "o2-yj";
        case StratumKind::O2XIJ: return "o2-xij";
        case StratumKind::ShellPiece: return "shell-piece";
    }
    return "?";
}

std::string zero_rule_tag(ZeroRule r) {
    return r == ZeroRule::ScalarCircle ? "scalar-circle" : "mixed-sign-circle";
}

namespace {

constexpr long long kSubsetCap = 20;

void check_subset_cap(long long n, const char* what) {
    if (n > kSubsetCap)
        throw SubsetBudgetExceeded(std::string(what) + " iterates 2^" +
                                   std::to_string(n) + " subsets (cap 2^20)");
}

std::vector<int> mask_indices(unsigned mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) out.push_back(i + 1);
    return out;
}

long long subset_gcd_abs(const std::vector<long long>& vals, unsigned mask) {
    long long g = 0;
    for (size_t i = 0; i < vals.size(); ++i)
        if (mask >> i & 1u) g = std::gcd(g, std::llabs(vals[i]));
    return g;
}

bool subset_all_equal_nonzero(const std::vector<long long>& vals, unsigned mask) {
    long long first = 0;
    bool seen = false;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!seen) {
            first = vals[i];
            seen = true;
        } else if (vals[i] != first) {
            return false;
        }
    }
    return seen && first != 0;
}

// Nonempty shell slice over I: the kernel equations sum a_i t_i = 0, t_i > 0
// have a solution iff a_I = {0} or a_I carries both signs. Verified against
// an explicit witness below.
bool shell_slice_nonempty(const std::vector<long long>& w, unsigned mask) {
    bool pos = false, neg = false, any = false;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        any = true;
        pos |= w[i] > 0;
        neg |= w[i] < 0;
    }
    return !any || (!pos && !neg) || (pos && neg);
}

// Independent feasibility probe: build the candidate positive kernel vector
// t_i = S^- for positive weights, S^+ for negative, 1 for zero, and verify
// it exactly. Disagreement with the sign rule is a logic error.
void assert_shell_rule(const std::vector<long long>& w, unsigned mask,
                       bool rule_nonempty) {
    EulerValue splus = 0, sminus = 0;
    bool any = false;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        any = true;
        if (w[i] > 0) splus += w[i];
        if (w[i] < 0) sminus -= w[i];
    }
    bool witness_ok;
    if (!any || (splus == 0 && sminus == 0)) {
        witness_ok = true;  // all-zero weights: every positive t works
    } else if (splus > 0 && sminus > 0) {
        EulerValue dot = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            if (!(mask >> i & 1u)) continue;
            EulerValue t = w[i] > 0 ? sminus : (w[i] < 0 ? splus : EulerValue(1));
            if (t <= 0) throw std::logic_error("shell witness not positive");
            dot += w[i] * t;
        }
        witness_ok = dot == 0;
        if (!witness_ok) throw std::logic_error("shell witness does not verify");
    } else {
        witness_ok = false;  // single-signed sums can't cancel
    }
    if (witness_ok != rule_nonempty)
        throw std::logic_error("shell nonemptiness rule contradicts witness");
}

std::string weights_descriptor(const std::vector<long long>& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace

Stratification stratify_s1_rep(const WeightVector& w) {
    const int n = w.size();
    check_subset_cap(n, "circle stratification");
    Stratification s;
    s.source = "s1-rep weights=" + weights_descriptor(w.entries);

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Stratum st;
        st.label.kind = StratumKind::S1Piece;
        st.label.index_set = mask_indices(mask, n);
        const long long g = subset_gcd_abs(w.entries, mask);
        st.isotropy = IsotropyClass::cyclic(g);  // g = 0 -> SO(2)
        const int size = std::popcount(mask);
        if (size == 0) {
            st.orbit_space_chi = 1;  // cone point of the orbit space
        } else if (g == 0) {
            // All selected weights vanish: the action on (C\0)^|I| is
            // trivial, and chi(C\0) = 0. Direct value, not a localization.
            st.orbit_space_chi = 0;
        } else if (size == 1) {
            st.orbit_space_chi = -1;  // open ray (0, infinity)
        } else if (subset_all_equal_nonzero(w.entries, mask)) {
            st.orbit_space_chi = 0;
            st.zeroed_by = ZeroRule::MixedSignCircle;
        } else {
            st.orbit_space_chi = 0;
            st.zeroed_by = ZeroRule::ScalarCircle;
        }
        s.strata.push_back(std::move(st));
    }
    return s;
}

namespace {

std::string o2_descriptor(const O2Representation& rep) {
    return "alphas=" + weights_descriptor(rep.alphas) +
           " d=" + std::to_string(rep.det_multiplicity);
}

}  // namespace

Stratification stratify_o2_rep(const O2Representation& rep) {
    rep.validate();
    if (rep.real_points)
        throw std::invalid_argument(
            "unitary stratifier takes real_points = false");
    const int n = rep.rotation_count();
    const auto d = static_cast<int>(rep.det_multiplicity);
    check_subset_cap(n, "O(2) stratification");
    check_subset_cap(d, "O(2) stratification");

    Stratification s;
    s.source = "o2-rep " + o2_descriptor(rep);

    Stratum origin;
    origin.label.kind = StratumKind::Origin;
    origin.orbit_space_chi = 1;
    origin.isotropy = IsotropyClass::full_o2();
    s.strata.push_back(std::move(origin));

    // X_i: second coordinate of pair i vanishes, first is nonzero; the
    // orbit space is an open ray.
    for (int i = 1; i <= n; ++i) {
        Stratum st;
        st.label.kind = StratumKind::O2Xi;
        st.label.index_set = {i};
        st.orbit_space_chi = -1;
        st.isotropy = IsotropyClass::cyclic(rep.alphas[i - 1]);
        s.strata.push_back(std::move(st));
    }

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        const long long g = subset_gcd_abs(rep.alphas, mask);

        Stratum star;
        star.label.kind = StratumKind::O2XStar;
        star.label.index_set = mask_indices(mask, n);
        star.orbit_space_chi = 0;
        star.isotropy = IsotropyClass::dihedral(g);
        star.zeroed_by = ZeroRule::ScalarCircle;
        s.strata.push_back(std::move(star));

        if (size >= 2) {
            Stratum cross;
            cross.label.kind = StratumKind::O2XCross;
            cross.label.index_set = mask_indices(mask, n);
            cross.orbit_space_chi = 0;
            cross.isotropy = IsotropyClass::cyclic(g);
            if (!subset_all_equal_nonzero(rep.alphas, mask))
                cross.zeroed_by = ZeroRule::ScalarCircle;
            // equal alphas: the orbit space is (0,1) x (C\0)^(|I|-1) x S^1
            // collapsed -- chi 0 directly, no localization step recorded
            s.strata.push_back(std::move(cross));
        }

        Stratum plain;
        plain.label.kind = StratumKind::O2XPlain;
        plain.label.index_set = mask_indices(mask, n);
        plain.orbit_space_chi = 0;
        plain.isotropy = IsotropyClass::cyclic(g);
        plain.zeroed_by = ZeroRule::ScalarCircle;
        s.strata.push_back(std::move(plain));
    }

    for (unsigned jmask = 1; jmask < (1u << d); ++jmask) {
        Stratum yj;
        yj.label.kind = StratumKind::O2YJ;
        yj.label.det_index_set = mask_indices(jmask, d);
        yj.orbit_space_chi = 0;
        yj.isotropy = IsotropyClass::circle_so2();
        yj.zeroed_by = ZeroRule::ScalarCircle;
        s.strata.push_back(std::move(yj));
    }

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const long long g = subset_gcd_abs(rep.alphas, mask);
        for (unsigned jmask = 1; jmask < (1u << d); ++jmask) {
            Stratum st;
            st.label.kind = StratumKind::O2XIJ;
            st.label.index_set = mask_indices(mask, n);
            st.label.det_index_set = mask_indices(jmask, d);
            st.orbit_space_chi = 0;
            st.isotropy = IsotropyClass::cyclic(g);
            st.zeroed_by = ZeroRule::ScalarCircle;
            s.strata.push_back(std::move(st));
        }
    }
    return s;
}

Stratification stratify_o2_real_rep(const O2Representation& rep) {
    rep.validate();
    if (!rep.real_points)
        throw std::invalid_argument("real stratifier takes real_points = true");
    const int n = rep.rotation_count();
    const auto d = static_cast<int>(rep.det_multiplicity);
    check_subset_cap(n, "real O(2) stratification");
    check_subset_cap(d, "real O(2) stratification");

    Stratification s;
    s.source = "o2-rep --real " + o2_descriptor(rep);

    Stratum origin;
    origin.label.kind = StratumKind::Origin;
    origin.orbit_space_chi = 1;
    origin.isotropy = IsotropyClass::full_o2();
    s.strata.push_back(std::move(origin));

    // Real points with a pair supported on {i} always admit a fixing
    // reflection, so X_i is empty.
    for (int i = 1; i <= n; ++i) {
        Stratum st;
        st.label.kind = StratumKind::O2Xi;
        st.label.index_set = {i};
        st.isotropy = IsotropyClass::cyclic(rep.alphas[i - 1]);
        st.empty = true;
        s.strata.push_back(std::move(st));
    }

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        const long long g = subset_gcd_abs(rep.alphas, mask);

        // X*_I: orbit space (0,1) x ((0,1) u (0,1))^(|I|-1).
        Stratum star;
        star.label.kind = StratumKind::O2XStar;
        star.label.index_set = mask_indices(mask, n);
        star.orbit_space_chi = -pow_ev(-2, static_cast<unsigned>(size - 1));
        star.isotropy = IsotropyClass::dihedral(g);
        s.strata.push_back(std::move(star));

        if (size >= 2) {  // |x_{i,1}| = |x_{i,2}| holds identically on V_R
            Stratum cross;
            cross.label.kind = StratumKind::O2XCross;
            cross.label.index_set = mask_indices(mask, n);
            cross.isotropy = IsotropyClass::cyclic(g);
            cross.empty = true;
            s.strata.push_back(std::move(cross));
        }

        Stratum plain;
        plain.label.kind = StratumKind::O2XPlain;
        plain.label.index_set = mask_indices(mask, n);
        if (size == 1) {
            plain.isotropy = IsotropyClass::cyclic(g);
            plain.empty = true;  // contained in X*_{i} over the reals
        } else if (size == 2) {
            plain.orbit_space_chi = -1;  // (0,1) x open 2-cell
            plain.isotropy = IsotropyClass::dihedral(g);
        } else {
            plain.orbit_space_chi = 0;  // (0,1) x C x (C\0)^... : chi 0 direct
            plain.isotropy = IsotropyClass::cyclic(g);
        }
        s.strata.push_back(std::move(plain));
    }

    for (unsigned jmask = 1; jmask < (1u << d); ++jmask) {
        const int size = std::popcount(jmask);
        Stratum yj;
        yj.label.kind = StratumKind::O2YJ;
        yj.label.det_index_set = mask_indices(jmask, d);
        yj.orbit_space_chi = -pow_ev(-2, static_cast<unsigned>(size - 1));
        yj.isotropy = IsotropyClass::circle_so2();
        s.strata.push_back(std::move(yj));
    }

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int isize = std::popcount(mask);
        const long long g = subset_gcd_abs(rep.alphas, mask);
        for (unsigned jmask = 1; jmask < (1u << d); ++jmask) {
            const int jsize = std::popcount(jmask);
            Stratum st;
            st.label.kind = StratumKind::O2XIJ;
            st.label.index_set = mask_indices(mask, n);
            st.label.det_index_set = mask_indices(jmask, d);
            st.isotropy = IsotropyClass::cyclic(g);
            if (isize == 1) {
                st.orbit_space_chi = pow_ev(-2, static_cast<unsigned>(jsize - 1));
            } else {
                st.orbit_space_chi = 0;  // free circle factor balances out
            }
            s.strata.push_back(std::move(st));
        }
    }
    return s;
}

Stratification stratify_s1_shell(const WeightVector& w) {
    const int n = w.size();
    check_subset_cap(n, "shell stratification");
    Stratification s;
    s.source = "s1-shell weights=" + weights_descriptor(w.entries);

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Stratum st;
        st.label.kind = StratumKind::ShellPiece;
        st.label.index_set = mask_indices(mask, n);
        st.isotropy = IsotropyClass::cyclic(subset_gcd_abs(w.entries, mask));
        const bool nonempty = shell_slice_nonempty(w.entries, mask);
        assert_shell_rule(w.entries, mask, nonempty);
        if (!nonempty) {
            st.empty = true;
        } else if (mask == 0) {
            st.orbit_space_chi = 1;  // the origin
        } else {
            // Nonempty away from the origin: either every selected weight is
            // zero (trivial action on (C\0)^|I|, chi 0) or the signs are
            // mixed, |I| >= 2, and the orbit space carries a torus factor
            // T^(|I|-1) from the moment equation. chi 0 either way, directly.
            st.orbit_space_chi = 0;
        }
        s.strata.push_back(std::move(st));
    }
    return s;
}

EulerValue evaluate_gamma_euler(const Stratification& s, const GammaGroup& gamma,
                                const EvalOptions& opts) {
    EulerValue total = 0;
    for (const Stratum& st : s.strata) {
        if (st.empty || st.orbit_space_chi == 0) continue;
        total += st.orbit_space_chi * chi_orbit_hom(gamma, st.isotropy, opts);
    }
    return total;
}

}  // namespace gamma_euler
