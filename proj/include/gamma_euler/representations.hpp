#pragma once

#include <vector>

namespace gamma_euler {

// Weights (a_1, ..., a_n) of a unitary circle representation; entries may be
// zero or negative, n >= 0.
struct WeightVector {
    std::vector<long long> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool all_zero() const;
    bool has_zero() const;

    // |a_i| over the nonzero entries, in order.
    std::vector<long long> nonzero_magnitudes() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// An O(2)-representation: rotation characters tau_alpha_i (alpha_i >= 1),
// det_multiplicity copies of the determinant character, and a flag selecting
// the real points (x_{i,2} = conj(x_{i,1})) instead of the full unitary
// space.
struct O2Representation {
    std::vector<long long> alphas;
    long long det_multiplicity = 0;
    bool real_points = false;

    int rotation_count() const { return static_cast<int>(alphas.size()); }

    // Throws std::invalid_argument unless every alpha_i >= 1 and
    // det_multiplicity >= 0.
    void validate() const;

    // The restriction to SO(2) = S^1: weights (a_1, -a_1, ..., a_n, -a_n)
    // followed by det_multiplicity zeros.
    WeightVector underlying_circle_weights() const;
};

}  // namespace gamma_euler
