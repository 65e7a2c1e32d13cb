#include "gamma_euler/representations.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gamma_euler {

bool WeightVector::all_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](long long a) { return a == 0; });
}

bool WeightVector::has_zero() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](long long a) { return a == 0; });
}

std::vector<long long> WeightVector::nonzero_magnitudes() const {
    std::vector<long long> out;
    for (long long a : entries)
        if (a != 0) out.push_back(std::llabs(a));
    return out;
}

void O2Representation::validate() const {
    for (long long a : alphas)
        if (a < 1)
            throw std::invalid_argument("O(2) rotation weights must be >= 1");
    if (det_multiplicity < 0)
        throw std::invalid_argument("det multiplicity must be >= 0");
}

WeightVector O2Representation::underlying_circle_weights() const {
    WeightVector w;
    for (long long a : alphas) {
        w.entries.push_back(a);
        w.entries.push_back(-a);
    }
    w.entries.insert(w.entries.end(), det_multiplicity, 0);
    return w;
}

}  // namespace gamma_euler
