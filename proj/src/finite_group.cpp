#include "gamma_euler/finite_group.hpp"

#include <stdexcept>

namespace gamma_euler {

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw std::invalid_argument("cyclic group needs m >= 1");
    FiniteGroup g;
    g.name_ = "Z/" + std::to_string(m);
    g.table_.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g.table_[a][b] = (a + b) % m;
    g.generators_ = {1 % m};
    g.finalize(m <= 256);
    return g;
}

FiniteGroup FiniteGroup::dihedral(int m) {
    if (m < 1) throw std::invalid_argument("dihedral group needs m >= 1");
    const int n = 2 * m;
    FiniteGroup g;
    g.name_ = "D_" + std::to_string(n);
    g.table_.assign(n, std::vector<int>(n));
    // id k < m: rotation r^k; id m+k: reflection r^k s.  s r = r^-1 s.
    for (int a = 0; a < n; ++a) {
        const int ar = a % m;
        const bool aref = a >= m;
        for (int b = 0; b < n; ++b) {
            const int br = b % m;
            const bool bref = b >= m;
            const int rot = aref ? (ar - br + m) % m : (ar + br) % m;
            g.table_[a][b] = rot + (aref != bref ? m : 0);
        }
    }
    g.generators_ = m >= 2 ? std::vector<int>{1, m} : std::vector<int>{m};
    g.finalize(n <= 256);
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::string name) {
    FiniteGroup g;
    g.table_ = std::move(table);
    g.name_ = name.empty() ? "table" : std::move(name);
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    g.generators_.resize(n);
    for (int i = 0; i < n; ++i) g.generators_[i] = i;
    g.finalize(n <= 256);
    return g;
}

void FiniteGroup::finalize(bool verify) {
    const int n = order();
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw std::invalid_argument("table entry out of range");
    }

    // Identity: a two-sided unit must exist.
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool unit = true;
        for (int a = 0; a < n && unit; ++a)
            unit = table_[e][a] == a && table_[a][e] == a;
        if (unit) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw std::invalid_argument("table has no identity");

    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0)
            throw std::invalid_argument("table element has no inverse");
    }

    if (verify) {  // O(n^3) associativity sweep, n <= 256
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw std::invalid_argument("table is not associative");
    }
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> out;
    const int n = order();
    for (int a = 0; a < n; ++a) {
        bool central = true;
        for (int b = 0; b < n && central; ++b) central = mul(a, b) == mul(b, a);
        if (central) out.push_back(a);
    }
    return out;
}

}  // namespace gamma_euler
