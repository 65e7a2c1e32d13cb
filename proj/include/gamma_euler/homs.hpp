#pragma once

#include <vector>

#include "gamma_euler/euler_value.hpp"
#include "gamma_euler/finite_group.hpp"
#include "gamma_euler/gamma_group.hpp"
#include "gamma_euler/isotropy.hpp"

namespace gamma_euler {

// Cap on |H|^generator_count candidate tuples per enumeration.
struct HomBudget {
    long long max_candidates = 100'000'000;

    // Reads GAMMA_EULER_BUDGET if set (positive integer), else the default.
    static HomBudget from_env();
};

// Evaluation context threaded through every chi evaluator. o2_hom_values
// optionally supplies chi(O(2)\Hom(gamma, O(2))) for gammas with no closed
// form, keyed by GammaGroup::structural_key().
struct EvalOptions {
    HomBudget budget{};
    const std::map<std::string, EulerValue>* o2_hom_values = nullptr;
};

// All homomorphisms gamma -> h as image tuples (one element id per
// generator, in presentation order), sorted lexicographically. Backtracking
// over generator images with relators checked as soon as every generator
// they mention is assigned. Throws BudgetExceeded if |h|^gens exceeds the
// budget.
std::vector<std::vector<int>> enumerate_homs(const GammaGroup& gamma,
                                             const FiniteGroup& h,
                                             const HomBudget& budget = {});

// Number of orbits of the conjugation action of h on a conjugation-closed
// list of image tuples (union-find driven by h's generators). Throws
// std::invalid_argument if the list is not closed under conjugation.
EulerValue conjugation_orbit_count(const FiniteGroup& h,
                                   const std::vector<std::vector<int>>& homs);

// Smith normal form diagonal of an integer matrix (exact arithmetic,
// pivot-magnitude selection). Returns min(rows, cols) entries, nonnegative,
// each dividing the next, zeros last.
std::vector<EulerValue> smith_normal_diagonal(
    std::vector<std::vector<EulerValue>> m);

// Gamma^ab = Z^rank + sum of Z/torsion[i], torsion in divisibility order,
// every entry > 1.
struct Abelianization {
    int rank = 0;
    std::vector<EulerValue> torsion;

    friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianize(const GammaGroup& gamma);

// chi(Hom(gamma, S^1)) in the definable sense: 0 when the abelianization has
// free rank >= 1 (each circle factor kills the product), else the torsion
// order |t_1 * ... * t_k| (a finite set of points).
EulerValue chi_hom_to_circle(const GammaGroup& gamma);

// chi(H\Hom(gamma, H)) for an isotropy class H. Dispatch:
//   Trivial      -> 1
//   Cyclic(m)    -> |Hom(gamma, Z/m)| (conjugation is trivial)
//   Dihedral(m)  -> conjugation orbit count over the enumerated homs
//   CircleSO2    -> chi_hom_to_circle
//   FullO2       -> closed form for ZPow/Free (after canonical()), else a
//                   value from opts.o2_hom_values, else UnsupportedGamma
//   FiniteTable  -> enumerate + conjugation orbit count
//   UserSupplied -> the class's own table, else UnsupportedGamma
// Results for the non-table classes are memoized internally (thread-safe);
// the cache never feeds the oracle-side Burnside counts.
EulerValue chi_orbit_hom(const GammaGroup& gamma, const IsotropyClass& cls,
                         const EvalOptions& opts = {});

}  // namespace gamma_euler
