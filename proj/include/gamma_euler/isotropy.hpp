#pragma once

#include <map>
#include <memory>
#include <string>

#include "gamma_euler/euler_value.hpp"
#include "gamma_euler/finite_group.hpp"
#include "gamma_euler/gamma_group.hpp"

namespace gamma_euler {

// The isotropy class attached to a stratum: which group H the factor
// chi(H\Hom(Gamma, H)) is taken over, and how to evaluate it.
class IsotropyClass {
  public:
    enum class Kind {
        Trivial,    // H = 1
        Cyclic,     // H = Z/m, m >= 1
        Dihedral,   // H = D_2m, m >= 1
        CircleSO2,  // H = SO(2)
        FullO2,     // H = O(2)
        FiniteTable,   // explicit finite group
        UserSupplied,  // named class with a user table of values per gamma
    };

    static IsotropyClass trivial();
    // m = 0 normalizes to CircleSO2 (the all-zero-weight kernel is the
    // whole circle); m >= 1 gives Z/m.
    static IsotropyClass cyclic(long long m);
    static IsotropyClass dihedral(long long m);  // m >= 1
    static IsotropyClass circle_so2();
    static IsotropyClass full_o2();
    static IsotropyClass finite_table(FiniteGroup group);
    static IsotropyClass user_supplied(std::string name,
                                       std::map<std::string, EulerValue> values);

    Kind kind() const { return kind_; }
    long long order_parameter() const { return m_; }  // m for Cyclic/Dihedral
    const FiniteGroup& table_group() const { return *table_group_; }

    // Lookup for UserSupplied; key is GammaGroup::structural_key(). Returns
    // nullptr when absent.
    const EulerValue* user_value(const GammaGroup& gamma) const;

    // Stable human-readable tag: "trivial", "cyclic:3", "dihedral:2",
    // "SO(2)", "O(2)", "table:<name>", "user:<name>". Used in JSON output
    // and as part of cache keys.
    std::string tag() const;

  private:
    Kind kind_ = Kind::Trivial;
    long long m_ = 0;
    std::shared_ptr<const FiniteGroup> table_group_;
    std::string name_;
    std::shared_ptr<const std::map<std::string, EulerValue>> user_values_;
};

}  // namespace gamma_euler
