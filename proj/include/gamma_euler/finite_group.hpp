#pragma once

#include <string>
#include <vector>

namespace gamma_euler {

// A finite group as a multiplication table over element ids 0..n-1.
// Tables of order <= 256 are fully verified on construction (identity,
// inverses, associativity); larger tables are taken on trust.
class FiniteGroup {
  public:
    // Z/m with ids 0..m-1, composition (a+b) mod m. m >= 1.
    static FiniteGroup cyclic(int m);

    // Dihedral group of order 2m, presentation <r, s | r^m, s^2, (rs)^2>.
    // Element ids: 0..m-1 are the rotations r^k, m..2m-1 are the
    // reflections r^k s. m >= 1 (m = 1 gives the order-2 group).
    static FiniteGroup dihedral(int m);

    // Arbitrary table; table[a][b] = a*b. Generators default to all elements.
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::string name = {});

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int conjugate(int g, int a) const {  // g a g^-1
        return mul(mul(g, a), inverse_[g]);
    }

    // A generating set (used to drive conjugation orbits; orbits under the
    // generators equal orbits under the whole group).
    const std::vector<int>& generators() const { return generators_; }

    // Elements commuting with everything, read off the table.
    std::vector<int> center() const;

    const std::string& name() const { return name_; }

  private:
    FiniteGroup() = default;
    void finalize(bool verify);  // fills identity_/inverse_, checks axioms

    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<int> generators_;
    int identity_ = 0;
    std::string name_;
};

}  // namespace gamma_euler
