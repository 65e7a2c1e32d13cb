#include "gamma_euler/homs.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gamma_euler/errors.hpp"
#include "gamma_euler/formulas.hpp"

namespace gamma_euler {

HomBudget HomBudget::from_env() {
    HomBudget b;
    if (const char* env = std::getenv("GAMMA_EULER_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_candidates = v;
    }
    return b;
}

namespace {

// Evaluate a relator word under a prefix assignment of generator images.
int eval_word(const FiniteGroup& h, const std::vector<int>& rel,
              const std::vector<int>& images) {
    int acc = h.identity();
    for (int idx : rel) {
        int g = images[std::abs(idx) - 1];
        if (idx < 0) g = h.inverse(g);
        acc = h.mul(acc, g);
    }
    return acc;
}

int max_generator(const std::vector<int>& rel) {
    int m = 0;
    for (int idx : rel) m = std::max(m, std::abs(idx));
    return m;
}

}  // namespace

std::vector<std::vector<int>> enumerate_homs(const GammaGroup& gamma,
                                             const FiniteGroup& h,
                                             const HomBudget& budget) {
    const Presentation p = gamma.to_presentation();
    const int gens = p.generator_count;
    const int n = h.order();

    EulerValue candidates = pow_ev(n, static_cast<unsigned>(gens));
    if (candidates > budget.max_candidates)
        throw BudgetExceeded("hom enumeration needs " + candidates.str() +
                             " candidates, budget is " +
                             std::to_string(budget.max_candidates));

    // Relators grouped by the deepest generator they mention, so each is
    // checked as soon as it becomes decidable.
    std::vector<std::vector<const std::vector<int>*>> at_depth(gens + 1);
    for (const auto& rel : p.relators)
        at_depth[max_generator(rel)].push_back(&rel);
    // Depth-0 relators are empty words: identically satisfied.

    std::vector<std::vector<int>> out;
    std::vector<int> images(gens, 0);
    // Iterative DFS in lexicographic image order.
    int depth = 0;
    while (depth >= 0) {
        if (depth == gens) {
            out.push_back(images);
            --depth;
            ++images[depth];
            continue;
        }
        if (images[depth] >= n) {
            images[depth] = 0;
            --depth;
            if (depth >= 0) ++images[depth];
            continue;
        }
        bool ok = true;
        for (const auto* rel : at_depth[depth + 1])
            if (eval_word(h, *rel, images) != h.identity()) {
                ok = false;
                break;
            }
        if (ok)
            ++depth;
        else
            ++images[depth];
    }
    return out;
}

namespace {

struct TupleHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EulerValue conjugation_orbit_count(const FiniteGroup& h,
                                   const std::vector<std::vector<int>>& homs) {
    const int n = h.order();
    std::unordered_map<std::vector<int>, int, TupleHash> index;
    index.reserve(homs.size() * 2);
    for (size_t i = 0; i < homs.size(); ++i) {
        for (int x : homs[i])
            if (x < 0 || x >= n)
                throw std::invalid_argument("hom tuple entry out of range");
        index.emplace(homs[i], static_cast<int>(i));
    }

    UnionFind uf(homs.size());
    std::vector<int> conj;
    for (size_t i = 0; i < homs.size(); ++i) {
        for (int g : h.generators()) {
            conj.clear();
            for (int x : homs[i]) conj.push_back(h.conjugate(g, x));
            auto it = index.find(conj);
            if (it == index.end())
                throw std::invalid_argument(
                    "hom list is not closed under conjugation");
            uf.unite(static_cast<int>(i), it->second);
        }
    }

    long long orbits = 0;
    for (size_t i = 0; i < homs.size(); ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++orbits;
    return orbits;
}

std::vector<EulerValue> smith_normal_diagonal(
    std::vector<std::vector<EulerValue>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    const int rank_bound = std::min(rows, cols);
    std::vector<EulerValue> diag;

    int t = 0;
    while (t < rank_bound) {
        // Smallest-magnitude nonzero pivot in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear column t by division with remainder; a nonzero
            // remainder becomes a smaller pivot.
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                EulerValue q = m[i][t] / m[t][t];
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                EulerValue q = m[t][j] / m[t][t];
                for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Divisibility: the pivot must divide the whole submatrix.
            for (int i = t + 1; i < rows && !dirty; ++i)
                for (int j = t + 1; j < cols && !dirty; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        dirty = true;
                    }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    diag.resize(rank_bound, 0);
    return diag;
}

Abelianization abelianize(const GammaGroup& gamma) {
    const Presentation p = gamma.to_presentation();
    std::vector<std::vector<EulerValue>> mat(
        p.relators.size(), std::vector<EulerValue>(p.generator_count, 0));
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (int idx : p.relators[i])
            mat[i][std::abs(idx) - 1] += idx > 0 ? 1 : -1;

    Abelianization ab;
    ab.rank = p.generator_count;
    for (const EulerValue& d : smith_normal_diagonal(std::move(mat))) {
        if (d == 0) continue;
        --ab.rank;
        if (d > 1) ab.torsion.push_back(d);
    }
    return ab;
}

EulerValue chi_hom_to_circle(const GammaGroup& gamma) {
    Abelianization ab = abelianize(gamma);
    if (ab.rank >= 1) return 0;
    EulerValue prod = 1;
    for (const EulerValue& t : ab.torsion) prod *= t;
    return prod;
}

namespace {

// Memo for the non-table isotropy classes. Purely an evaluation cache: the
// Burnside oracle never reads it, so cross-checks stay independent.
std::mutex cache_mutex;
std::map<std::pair<std::string, std::string>, EulerValue>& value_cache() {
    static std::map<std::pair<std::string, std::string>, EulerValue> c;
    return c;
}

EulerValue chi_orbit_hom_uncached(const GammaGroup& gamma,
                                  const IsotropyClass& cls,
                                  const EvalOptions& opts) {
    switch (cls.kind()) {
        case IsotropyClass::Kind::Trivial:
            return 1;
        case IsotropyClass::Kind::Cyclic: {
            auto m = static_cast<int>(cls.order_parameter());
            return enumerate_homs(gamma, FiniteGroup::cyclic(m), opts.budget)
                .size();
        }
        case IsotropyClass::Kind::Dihedral: {
            FiniteGroup d =
                FiniteGroup::dihedral(static_cast<int>(cls.order_parameter()));
            return conjugation_orbit_count(
                d, enumerate_homs(gamma, d, opts.budget));
        }
        case IsotropyClass::Kind::CircleSO2:
            return chi_hom_to_circle(gamma);
        case IsotropyClass::Kind::FullO2: {
            GammaGroup c = gamma.canonical();
            if (c.kind() == GammaGroup::Kind::ZPow)
                return chi_o2_hom_closed(c.generator_count(), FreeKind::abelian);
            if (c.kind() == GammaGroup::Kind::Free)
                return chi_o2_hom_closed(c.generator_count(), FreeKind::free);
            if (opts.o2_hom_values) {
                auto it = opts.o2_hom_values->find(gamma.structural_key());
                if (it != opts.o2_hom_values->end()) return it->second;
            }
            throw UnsupportedGamma(
                "no O(2) hom formula for gamma " + gamma.structural_key() +
                " and no user-supplied value");
        }
        case IsotropyClass::Kind::FiniteTable:
            return conjugation_orbit_count(
                cls.table_group(),
                enumerate_homs(gamma, cls.table_group(), opts.budget));
        case IsotropyClass::Kind::UserSupplied: {
            if (const EulerValue* v = cls.user_value(gamma)) return *v;
            throw UnsupportedGamma("isotropy class '" + cls.tag() +
                                   "' has no value for gamma " +
                                   gamma.structural_key());
        }
    }
    throw std::logic_error("unreachable isotropy kind");
}

bool cacheable(const IsotropyClass& cls, const GammaGroup& gamma) {
    switch (cls.kind()) {
        case IsotropyClass::Kind::FiniteTable:
        case IsotropyClass::Kind::UserSupplied:
            return false;  // table identity is not part of the key
        case IsotropyClass::Kind::FullO2: {
            // Only cache the closed-form path; table-backed answers depend
            // on the options.
            auto k = gamma.canonical().kind();
            return k == GammaGroup::Kind::ZPow || k == GammaGroup::Kind::Free;
        }
        default:
            return true;
    }
}

}  // namespace

EulerValue chi_orbit_hom(const GammaGroup& gamma, const IsotropyClass& cls,
                         const EvalOptions& opts) {
    if (!cacheable(cls, gamma))
        return chi_orbit_hom_uncached(gamma, cls, opts);

    const std::pair<std::string, std::string> key{gamma.structural_key(),
                                                  cls.tag()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = value_cache().find(key);
        if (it != value_cache().end()) return it->second;
    }
    EulerValue v = chi_orbit_hom_uncached(gamma, cls, opts);
    std::lock_guard<std::mutex> lock(cache_mutex);
    value_cache().emplace(key, v);
    return v;
}

}  // namespace gamma_euler
