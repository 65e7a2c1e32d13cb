#include "gamma_euler/isotropy.hpp"

#include <stdexcept>

namespace gamma_euler {

IsotropyClass IsotropyClass::trivial() { return {}; }

IsotropyClass IsotropyClass::cyclic(long long m) {
    if (m < 0) throw std::invalid_argument("cyclic isotropy needs m >= 0");
    if (m == 0) return circle_so2();
    IsotropyClass c;
    c.kind_ = Kind::Cyclic;
    c.m_ = m;
    return c;
}

IsotropyClass IsotropyClass::dihedral(long long m) {
    if (m < 1) throw std::invalid_argument("dihedral isotropy needs m >= 1");
    IsotropyClass c;
    c.kind_ = Kind::Dihedral;
    c.m_ = m;
    return c;
}

IsotropyClass IsotropyClass::circle_so2() {
    IsotropyClass c;
    c.kind_ = Kind::CircleSO2;
    return c;
}

IsotropyClass IsotropyClass::full_o2() {
    IsotropyClass c;
    c.kind_ = Kind::FullO2;
    return c;
}

IsotropyClass IsotropyClass::finite_table(FiniteGroup group) {
    IsotropyClass c;
    c.kind_ = Kind::FiniteTable;
    c.table_group_ = std::make_shared<const FiniteGroup>(std::move(group));
    return c;
}

IsotropyClass IsotropyClass::user_supplied(
    std::string name, std::map<std::string, EulerValue> values) {
    IsotropyClass c;
    c.kind_ = Kind::UserSupplied;
    c.name_ = std::move(name);
    c.user_values_ =
        std::make_shared<const std::map<std::string, EulerValue>>(std::move(values));
    return c;
}

const EulerValue* IsotropyClass::user_value(const GammaGroup& gamma) const {
    if (kind_ != Kind::UserSupplied || !user_values_) return nullptr;
    auto it = user_values_->find(gamma.structural_key());
    return it == user_values_->end() ? nullptr : &it->second;
}

std::string IsotropyClass::tag() const {
    switch (kind_) {
        case Kind::Trivial: return "trivial";
        case Kind::Cyclic: return "cyclic:" + std::to_string(m_);
        case Kind::Dihedral: return "dihedral:" + std::to_string(m_);
        case Kind::CircleSO2: return "SO(2)";
        case Kind::FullO2: return "O(2)";
        case Kind::FiniteTable: return "table:" + table_group_->name();
        case Kind::UserSupplied: return "user:" + name_;
    }
    return "?";
}

}  // namespace gamma_euler
