#include "gamma_euler/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gamma_euler/errors.hpp"

namespace gamma_euler {

EulerValue TupleCensus::commuting_total() const {
    EulerValue t = 0;
    for (TupleType ty : {TupleType::I, TupleType::II, TupleType::III}) {
        auto it = counts.find(ty);
        if (it != counts.end()) t += it->second.orbit_chi;
    }
    return t;
}

EulerValue TupleCensus::full_total() const {
    EulerValue t = 0;
    for (const auto& [ty, entry] : counts) t += entry.orbit_chi;
    return t;
}

namespace {

// Orbit count of the conjugation action on an explicit tuple list, by plain
// closure sweeps. Independent of the union-find path in the groups module.
EulerValue orbit_count_by_closure(const FiniteGroup& h,
                                  const std::set<std::vector<int>>& tuples) {
    std::set<std::vector<int>> seen;
    EulerValue orbits = 0;
    const int n = h.order();
    std::vector<std::vector<int>> stack;
    for (const auto& t : tuples) {
        if (seen.count(t)) continue;
        ++orbits;
        stack.assign(1, t);
        seen.insert(t);
        while (!stack.empty()) {
            std::vector<int> cur = std::move(stack.back());
            stack.pop_back();
            for (int g = 0; g < n; ++g) {
                std::vector<int> conj(cur.size());
                for (size_t k = 0; k < cur.size(); ++k)
                    conj[k] = h.conjugate(g, cur[k]);
                if (!tuples.count(conj))
                    throw std::logic_error("tuple class not conjugation-closed");
                if (seen.insert(conj).second) stack.push_back(std::move(conj));
            }
        }
    }
    return orbits;
}

}  // namespace

TupleCensus dihedral_tuple_census(long long m, int ell, const HomBudget& budget) {
    if (m < 1 || ell < 1)
        throw std::invalid_argument("census needs m >= 1, l >= 1");
    const FiniteGroup d = FiniteGroup::dihedral(static_cast<int>(m));
    const int n = d.order();
    EulerValue candidates = pow_ev(n, static_cast<unsigned>(ell));
    if (candidates > budget.max_candidates)
        throw BudgetExceeded("census needs " + candidates.str() +
                             " tuples, budget is " +
                             std::to_string(budget.max_candidates));

    const std::vector<int> center_list = d.center();
    std::vector<char> central(n, 0);
    for (int c : center_list) central[c] = 1;
    const auto is_rotation = [m](int x) { return x < m; };

    std::map<TupleType, std::set<std::vector<int>>> buckets;
    std::vector<int> tuple(ell, 0);
    while (true) {
        bool all_central = true, all_rot = true;
        for (int x : tuple) {
            all_central &= static_cast<bool>(central[x]);
            all_rot &= is_rotation(x);
        }
        TupleType type;
        if (all_central) {
            type = TupleType::I;
        } else if (all_rot) {
            type = TupleType::II;
        } else {
            // A reflection occurring in the tuple that commutes with every
            // entry makes it type III; otherwise type IV.
            bool common = false;
            for (int s : tuple) {
                if (is_rotation(s)) continue;
                bool commutes = true;
                for (int x : tuple)
                    if (d.mul(s, x) != d.mul(x, s)) {
                        commutes = false;
                        break;
                    }
                if (commutes) {
                    common = true;
                    break;
                }
            }
            type = common ? TupleType::III : TupleType::IV;
        }
        buckets[type].insert(tuple);

        int k = ell - 1;
        while (k >= 0 && tuple[k] == n - 1) tuple[k--] = 0;
        if (k < 0) break;
        ++tuple[k];
    }

    TupleCensus census;
    census.ell = ell;
    for (TupleType ty :
         {TupleType::I, TupleType::II, TupleType::III, TupleType::IV}) {
        TupleCensus::Entry e;
        auto it = buckets.find(ty);
        e.tuple_count = it == buckets.end()
                            ? EulerValue(0)
                            : EulerValue(it->second.size());
        e.orbit_chi = it == buckets.end()
                          ? EulerValue(0)
                          : orbit_count_by_closure(d, it->second);
        census.counts[ty] = std::move(e);
    }
    return census;
}

TupleCensus o2_tuple_type_counts(int ell) {
    if (ell < 1) throw std::invalid_argument("census needs l >= 1");
    const auto type_ii = [](int l) -> EulerValue {
        return -pow_ev(2, static_cast<unsigned>(l - 1));
    };
    const auto type_iii = [](int l) -> EulerValue {
        EulerValue s = 0;
        for (int r = 1; r <= l; ++r)
            s += pow_ev(2, static_cast<unsigned>(r - 1)) *
                 pow_ev(4, static_cast<unsigned>(l - r));
        return s;
    };

    TupleCensus census;
    census.ell = ell;
    census.counts[TupleType::I] = {pow_ev(2, static_cast<unsigned>(ell)),
                                   pow_ev(2, static_cast<unsigned>(ell))};
    census.counts[TupleType::II] = {std::nullopt, type_ii(ell)};
    census.counts[TupleType::III] = {std::nullopt, type_iii(ell)};
    if (ell >= 2) {
        // chi_2 = -3; chi_{l+1} = chi^II_l - 2 chi^III_l.
        EulerValue iv = -3;
        for (int l = 2; l < ell; ++l) iv = type_ii(l) - 2 * type_iii(l);
        census.counts[TupleType::IV] = {std::nullopt, iv};
    }
    return census;
}

EulerValue burnside_orbit_count(const FiniteGroup& h,
                                const std::vector<std::vector<int>>& homs) {
    const int n = h.order();
    EulerValue fixed_total = 0;
    for (int g = 0; g < n; ++g) {
        long long fixed = 0;
        for (const auto& t : homs) {
            bool is_fixed = true;
            for (int x : t)
                if (h.conjugate(g, x) != x) {
                    is_fixed = false;
                    break;
                }
            fixed += is_fixed;
        }
        fixed_total += fixed;
    }
    if (fixed_total % n != 0)
        throw NonIntegralBurnside("fixed-point total " + fixed_total.str() +
                                  " not divisible by group order " +
                                  std::to_string(n));
    return fixed_total / n;
}

std::vector<std::pair<std::vector<long long>, std::vector<long long>>>
weight_recovery_scan(int max_n, long long weight_bound) {
    if (max_n < 1 || weight_bound < 1)
        throw std::invalid_argument("scan needs max_n >= 1, weight_bound >= 1");

    // Candidate count before any enumeration: sum over sizes k of
    // C(weight_bound + k - 1, k) multisets.
    EulerValue count = 0;
    for (int k = 1; k <= max_n; ++k) {
        EulerValue binom = 1;
        for (int j = 1; j <= k; ++j)
            binom = exact_div(binom * (weight_bound + j - 1), j);
        count += binom;
    }
    const EulerValue pairs = count * (count - 1) / 2;
    if (pairs > 10'000'000)
        throw BudgetExceeded("weight recovery scan would compare " +
                             pairs.str() + " pairs");

    // All nondecreasing magnitude multisets, sizes 1..max_n.
    std::vector<std::vector<long long>> multisets;
    std::vector<long long> cur;
    const auto extend = [&](auto&& self, long long lo) -> void {
        if (!cur.empty()) multisets.push_back(cur);
        if (static_cast<int>(cur.size()) == max_n) return;
        for (long long a = lo; a <= weight_bound; ++a) {
            cur.push_back(a);
            self(self, a);
            cur.pop_back();
        }
    };
    extend(extend, 1);

    // Signature: the circle closed-form values (-sum a^l) for l = 1..max_n,
    // computed right here rather than through the formulas module.
    std::map<std::vector<EulerValue>, std::vector<size_t>> by_signature;
    for (size_t i = 0; i < multisets.size(); ++i) {
        std::vector<EulerValue> sig;
        for (int l = 1; l <= max_n; ++l) {
            EulerValue s = 0;
            for (long long a : multisets[i])
                s += pow_ev(a, static_cast<unsigned>(l));
            sig.push_back(-s);
        }
        by_signature[sig].push_back(i);
    }

    std::vector<std::pair<std::vector<long long>, std::vector<long long>>> out;
    for (const auto& [sig, idxs] : by_signature)
        for (size_t i = 0; i < idxs.size(); ++i)
            for (size_t j = i + 1; j < idxs.size(); ++j)
                out.emplace_back(multisets[idxs[i]], multisets[idxs[j]]);
    return out;
}

}  // namespace gamma_euler
