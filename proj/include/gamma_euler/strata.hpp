#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma_euler/euler_value.hpp"
#include "gamma_euler/homs.hpp"
#include "gamma_euler/representations.hpp"

namespace gamma_euler {

enum class StratumKind {
    Origin,     // the fixed origin
    S1Piece,    // V_I: circle rep coordinates nonzero exactly on I
    O2Xi,       // X_i: one rotation coordinate pair, second entry zero
    O2XStar,    // X*_I: a common reflection fixes the point
    O2XCross,   // X^x_I: |x_{i,1}| = |x_{i,2}| on I, no common reflection
    O2XPlain,   // X_I: all four coords nonzero, |x_{i,1}| != |x_{i,2}|
    O2YJ,       // Y_J: only det coordinates (on J) nonzero
    O2XIJ,      // X_{I,J}: rotation support I and det support J
    ShellPiece  // mu^-1(0) sliced by the circle stratification
};

std::string stratum_kind_tag(StratumKind k);

struct StratumLabel {
    StratumKind kind = StratumKind::Origin;
    std::vector<int> index_set;      // I, 1-based coordinate positions
    std::vector<int> det_index_set;  // J, 1-based det positions

    friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

// Why a stratum's orbit-space chi is zero without computing it: a free
// circle factor in the orbit-space description.
enum class ZeroRule {
    ScalarCircle,   // a scalar circle acts freely on the piece
    MixedSignCircle // the weight-(1,...,1,-1) subcircle acts freely
};

std::string zero_rule_tag(ZeroRule r);

struct Stratum {
    StratumLabel label;
    EulerValue orbit_space_chi = 0;  // chi of the orbit space of the piece
    IsotropyClass isotropy;
    std::optional<ZeroRule> zeroed_by;
    bool empty = false;  // the piece has no points (chi stays 0)
};

struct Stratification {
    std::string source;  // which space and parameters produced this
    std::vector<Stratum> strata;
};

// Orbit-type stratification of the unitary circle representation V with the
// given weights: one stratum per subset I of {1..n} (bitmask order),
// piece V_I = {v : v_i != 0 exactly for i in I}.
Stratification stratify_s1_rep(const WeightVector& w);

// Orbit-type stratification of the unitary O(2) representation (real_points
// false): origin, X_i, X*_I, X^x_I (|I| >= 2), X_I, Y_J, X_{I,J}.
Stratification stratify_o2_rep(const O2Representation& rep);

// Real-points version (real_points true): X_i and X^x_I are empty, X*_I and
// Y_J and X_{i,J} carry the signed 2-power chis, X_I survives only for
// |I| = 2 (chi -1) and |I| >= 3 (chi 0).
Stratification stratify_o2_real_rep(const O2Representation& rep);

// The zero shell mu^-1(0) of the circle representation, sliced by the V_I
// pieces. A slice is nonempty iff a_I = {0} or a_I has entries of both
// signs; nonemptiness is re-verified against an explicit positive kernel
// witness. Only the I = empty slice (the origin) has nonzero chi.
Stratification stratify_s1_shell(const WeightVector& w);

// sum over strata of orbit_space_chi * chi(H_i\Hom(gamma, H_i)). Strata with
// chi = 0 (and empty strata) are skipped without evaluating the Hom factor,
// so zeroed pieces never require a supported isotropy evaluation.
EulerValue evaluate_gamma_euler(const Stratification& s, const GammaGroup& gamma,
                                const EvalOptions& opts = {});

}  // namespace gamma_euler
