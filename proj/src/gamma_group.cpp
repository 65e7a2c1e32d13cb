#include "gamma_euler/gamma_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace gamma_euler {

void Presentation::validate() const {
    if (generator_count < 1)
        throw std::invalid_argument("presentation needs at least one generator");
    for (const auto& rel : relators)
        for (int idx : rel)
            if (idx == 0 || std::abs(idx) > generator_count)
                throw std::invalid_argument("relator letter out of range");
}

GammaGroup GammaGroup::z_pow(int ell) {
    if (ell < 1) throw std::invalid_argument("Z^l needs l >= 1");
    return GammaGroup(Kind::ZPow, ell, {});
}

GammaGroup GammaGroup::free_group(int ell) {
    if (ell < 1) throw std::invalid_argument("F_l needs l >= 1");
    return GammaGroup(Kind::Free, ell, {});
}

GammaGroup GammaGroup::presented(Presentation p) {
    p.validate();
    return GammaGroup(Kind::Presented, 0, std::move(p));
}

int GammaGroup::generator_count() const {
    return kind_ == Kind::Presented ? presentation_.generator_count : ell_;
}

const Presentation& GammaGroup::presentation() const {
    if (kind_ != Kind::Presented)
        throw std::logic_error("presentation() on a non-presented group");
    return presentation_;
}

Presentation GammaGroup::to_presentation() const {
    if (kind_ == Kind::Presented) return presentation_;
    Presentation p;
    p.generator_count = ell_;
    if (kind_ == Kind::ZPow) {
        for (int i = 1; i <= ell_; ++i)
            for (int j = i + 1; j <= ell_; ++j)
                p.relators.push_back({i, j, -i, -j});
    }
    return p;
}

namespace {

// Is `word` the commutator [i, j] = (i, j, -i, -j) of two distinct
// generators, up to cyclic rotation and inversion? Returns the unordered
// pair {min, max} if so.
std::optional<std::pair<int, int>> as_commutator(const std::vector<int>& word) {
    if (word.size() != 4) return std::nullopt;
    for (int rot = 0; rot < 4; ++rot) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> w(4);
            for (int k = 0; k < 4; ++k) w[k] = word[(k + rot) % 4];
            if (dir) {  // inverse word: reverse, negate
                std::reverse(w.begin(), w.end());
                for (int& x : w) x = -x;
            }
            int i = w[0], j = w[1];
            if (i > 0 && j > 0 && i != j && w[2] == -i && w[3] == -j)
                return std::make_pair(std::min(i, j), std::max(i, j));
        }
    }
    return std::nullopt;
}

}  // namespace

GammaGroup GammaGroup::canonical() const {
    if (kind_ == Kind::Free) return ell_ == 1 ? z_pow(1) : *this;
    if (kind_ != Kind::Presented) return *this;

    const int g = presentation_.generator_count;
    if (presentation_.relators.empty())
        return g == 1 ? z_pow(1) : free_group(g);

    // Exactly the pairwise commutators, each pair covered once?
    std::set<std::pair<int, int>> pairs;
    for (const auto& rel : presentation_.relators) {
        auto pr = as_commutator(rel);
        if (!pr || !pairs.insert(*pr).second) return *this;
    }
    if (static_cast<int>(pairs.size()) == g * (g - 1) / 2) return z_pow(g);
    return *this;
}

std::string GammaGroup::structural_key() const {
    GammaGroup c = canonical();
    switch (c.kind_) {
        case Kind::ZPow: return "Z^" + std::to_string(c.ell_);
        case Kind::Free: return "F^" + std::to_string(c.ell_);
        case Kind::Presented: break;
    }
    std::string key = "P" + std::to_string(c.presentation_.generator_count) + ":";
    for (const auto& rel : c.presentation_.relators) {
        for (int idx : rel) key += std::to_string(idx) + ",";
        key += ";";
    }
    return key;
}

}  // namespace gamma_euler
