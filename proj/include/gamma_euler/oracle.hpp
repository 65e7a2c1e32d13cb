#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gamma_euler/euler_value.hpp"
#include "gamma_euler/gamma_group.hpp"
#include "gamma_euler/homs.hpp"

namespace gamma_euler {

// Independent counting engines used to cross-check the closed forms. These
// deliberately avoid the production dispatch in chi_orbit_hom.

enum class TupleType { I, II, III, IV };

struct TupleCensus {
    struct Entry {
        // Raw tuple count; absent when the type is an infinite family
        // (the symbolic O(2) census).
        std::optional<EulerValue> tuple_count;
        // chi of the per-type orbit contribution: a plain orbit count for
        // the finite censuses, a signed chi for the symbolic O(2) one.
        EulerValue orbit_chi = 0;
    };
    int ell = 0;
    std::map<TupleType, Entry> counts;

    // Types I + II + III: the commuting-tuple (Z^l) total.
    EulerValue commuting_total() const;
    // All types present: the free (F_l) total.
    EulerValue full_total() const;
};

// Classifies every l-tuple over D_2m by direct inspection of the
// multiplication table and counts conjugation orbits per type:
//   I:   every entry is central (center read from the table, not parity)
//   II:  all entries are rotations, not all central
//   III: some entry is a reflection, and a reflection present in the tuple
//        commutes with every entry
//   IV:  the rest
// Requires (2m)^l <= budget.
TupleCensus dihedral_tuple_census(long long m, int ell,
                                  const HomBudget& budget = {});

// The symbolic O(2) census: per-type chi of the orbit space of l-tuples,
//   I:   2^l          (tuples over the center, discrete)
//   II:  -2^(l-1)
//   III: sum over r = 1..l of 2^(r-1) * 4^(l-r)
//   IV:  absent for l = 1; chi_2 = -3, then
//        chi_{l+1} = chi^II_l - 2 * chi^III_l.
TupleCensus o2_tuple_type_counts(int ell);

// Orbit count via Burnside: average number of fixed tuples over all group
// elements. Throws NonIntegralBurnside when the sum does not divide.
EulerValue burnside_orbit_count(const FiniteGroup& h,
                                const std::vector<std::vector<int>>& homs);

// Searches for distinct positive weight magnitude multisets (sizes
// 1..max_n, entries 1..weight_bound) whose circle closed-form signatures
// (-sum a^l for l = 1..max_n) coincide. The contract is that the result is
// empty: the signature determines the padded multiset (power sums + Newton
// identities). Requires at most 10^7 candidate pairs.
std::vector<std::pair<std::vector<long long>, std::vector<long long>>>
weight_recovery_scan(int max_n, long long weight_bound);

}  // namespace gamma_euler
