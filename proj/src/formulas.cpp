#include "gamma_euler/formulas.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "gamma_euler/errors.hpp"

namespace gamma_euler {

namespace {

EulerValue sum_cyclic_hom_chis(const WeightVector& w, const GammaGroup& gamma,
                               const EvalOptions& opts) {
    EulerValue s = 0;
    for (long long a : w.entries)
        if (a != 0)
            s += chi_orbit_hom(gamma, IsotropyClass::cyclic(std::llabs(a)), opts);
    return s;
}

void require_unitary(const O2Representation& rep) {
    rep.validate();
    if (rep.real_points)
        throw std::invalid_argument(
            "this evaluator takes the unitary representation "
            "(real_points = false)");
}

void require_real(const O2Representation& rep) {
    rep.validate();
    if (!rep.real_points)
        throw std::invalid_argument(
            "this evaluator takes the real points (real_points = true)");
}

// gcd over the alphas selected by mask; alphas are >= 1 so this is >= 1.
long long subset_gcd(const std::vector<long long>& alphas, unsigned mask) {
    long long g = 0;
    for (size_t i = 0; i < alphas.size(); ++i)
        if (mask >> i & 1u) g = std::gcd(g, alphas[i]);
    return g;
}

FreeKind normalize_free_one(int ell, FreeKind kind) {
    return (kind == FreeKind::free && ell == 1) ? FreeKind::abelian : kind;
}

}  // namespace

EulerValue chi_s1_rep(const WeightVector& w, const GammaGroup& gamma,
                      const EvalOptions& opts) {
    return chi_hom_to_circle(gamma) - sum_cyclic_hom_chis(w, gamma, opts);
}

EulerValue chi_s1_rep_real(const WeightVector& w, long long d,
                           const GammaGroup& gamma, const EvalOptions& opts) {
    if (d < 0) throw std::invalid_argument("fixed-subspace dimension d >= 0");
    if (w.has_zero())
        throw RejectsZeroWeight("real circle case requires nonzero weights");
    const int s = parity_sign(d);
    return s * chi_hom_to_circle(gamma) - s * sum_cyclic_hom_chis(w, gamma, opts);
}

EulerValue chi_s1_rep_closed(const WeightVector& w, int ell, FreeKind kind,
                             std::optional<long long> d) {
    if (ell < 1) throw std::invalid_argument("closed form needs l >= 1");
    (void)kind;  // the free and free-abelian branches coincide here
    if (d) {
        if (*d < 0) throw std::invalid_argument("fixed-subspace dimension d >= 0");
        if (w.has_zero())
            throw RejectsZeroWeight("real circle case requires nonzero weights");
    }
    EulerValue sum = 0;
    for (long long a : w.entries)
        if (a != 0) sum += pow_ev(std::llabs(a), static_cast<unsigned>(ell));
    return d ? EulerValue(parity_sign(*d + 1) * sum) : EulerValue(-sum);
}

EulerValue chi_s1_sphere(const WeightVector& w, const GammaGroup& gamma,
                         const EvalOptions& opts) {
    return sum_cyclic_hom_chis(w, gamma, opts);
}

EulerValue chi_s1_ball(const WeightVector& w, const GammaGroup& gamma,
                       const EvalOptions& opts) {
    (void)w;  // the ball retracts onto the origin stratum for any weights
    (void)opts;
    return chi_hom_to_circle(gamma);
}

EulerValue chi_o2_hom_closed(int ell, FreeKind kind) {
    if (ell < 1) throw std::invalid_argument("closed form needs l >= 1");
    if (kind == FreeKind::abelian)
        return pow_ev(2, static_cast<unsigned>(2 * ell - 1));
    if (ell == 1)
        throw FreeEllOne("chi(O(2)\\Hom(F_1, O(2))): normalize F_1 to Z first");
    return pow_ev(2, static_cast<unsigned>(ell - 2)) *
           (pow_ev(2, static_cast<unsigned>(ell)) + 1);
}

EulerValue chi_dihedral_hom_closed(long long m, int ell, FreeKind kind) {
    if (m < 1 || ell < 1)
        throw std::invalid_argument("dihedral closed form needs m >= 1, l >= 1");
    kind = normalize_free_one(ell, kind);
    const long long p = m % 2 == 0 ? 2 : 1;
    const auto ul = static_cast<unsigned>(ell);
    if (kind == FreeKind::abelian)
        return exact_div(
            pow_ev(m, ul) + pow_ev(p, ul) * (pow_ev(2, ul + 1) - 1), 2);
    return exact_div(pow_ev(2 * p, ul) +
                         p * pow_ev(m, ul - 1) * (pow_ev(2, ul) - 1) +
                         pow_ev(m, ul),
                     2);
}

EulerValue chi_o2_rep(const O2Representation& rep, const GammaGroup& gamma,
                      const EvalOptions& opts) {
    require_unitary(rep);
    EulerValue total = chi_orbit_hom(gamma, IsotropyClass::full_o2(), opts);
    for (long long a : rep.alphas)
        total -= chi_orbit_hom(gamma, IsotropyClass::cyclic(a), opts);
    return total;
}

EulerValue chi_o2_real_rep(const O2Representation& rep, const GammaGroup& gamma,
                           const EvalOptions& opts) {
    require_real(rep);
    const int n = rep.rotation_count();
    if (n > 20)
        throw SubsetBudgetExceeded("real O(2) evaluator iterates 2^" +
                                   std::to_string(n) + " subsets");

    EulerValue total = chi_orbit_hom(gamma, IsotropyClass::full_o2(), opts);
    const int sd = parity_sign(rep.det_multiplicity);
    if (sd < 0) total -= chi_hom_to_circle(gamma);  // ((-1)^d - 1)/2 term

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        const EulerValue dval = chi_orbit_hom(
            gamma, IsotropyClass::dihedral(subset_gcd(rep.alphas, mask)), opts);
        total -= pow_ev(-2, static_cast<unsigned>(size - 1)) * dval;
        if (size == 2) total -= dval;
    }

    if (sd < 0)  // (1 - (-1)^d)/2 term
        for (long long a : rep.alphas)
            total += chi_orbit_hom(gamma, IsotropyClass::cyclic(a), opts);
    return total;
}

EulerValue chi_o2_rep_closed(const O2Representation& rep, int ell, FreeKind kind) {
    require_unitary(rep);
    EulerValue total = chi_o2_hom_closed(ell, normalize_free_one(ell, kind));
    for (long long a : rep.alphas) total -= pow_ev(a, static_cast<unsigned>(ell));
    return total;
}

EulerValue chi_o2_real_rep_closed(const O2Representation& rep, int ell,
                                  FreeKind kind) {
    require_real(rep);
    kind = normalize_free_one(ell, kind);
    const int n = rep.rotation_count();
    if (n > 20)
        throw SubsetBudgetExceeded("real O(2) closed form iterates 2^" +
                                   std::to_string(n) + " subsets");

    // chi(Hom(Z^l or F_l, S^1)) = 0, so the ((-1)^d - 1)/2 term drops.
    EulerValue total = chi_o2_hom_closed(ell, kind);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        const EulerValue dval =
            chi_dihedral_hom_closed(subset_gcd(rep.alphas, mask), ell, kind);
        total -= pow_ev(-2, static_cast<unsigned>(size - 1)) * dval;
        if (size == 2) total -= dval;
    }
    if (parity_sign(rep.det_multiplicity) < 0)
        for (long long a : rep.alphas)
            total += pow_ev(a, static_cast<unsigned>(ell));
    return total;
}

EulerValue chi_symplectic_quotient(const IsotropyClass& g,
                                   const GammaGroup& gamma,
                                   const EvalOptions& opts) {
    return chi_orbit_hom(gamma, g, opts);
}

EulerValue chi_z2_quotient(const GammaGroup& gamma, const EvalOptions& opts) {
    return chi_orbit_hom(gamma, IsotropyClass::cyclic(2), opts);
}

}  // namespace gamma_euler
