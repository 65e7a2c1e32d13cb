#pragma once

#include <optional>

#include "gamma_euler/euler_value.hpp"
#include "gamma_euler/homs.hpp"
#include "gamma_euler/representations.hpp"

namespace gamma_euler {

// Selects the closed-form branch: Gamma = Z^l (abelian) or F_l (free).
enum class FreeKind { abelian, free };

// ---- Circle representations -------------------------------------------

// chi_Gamma(S^1 x V) for the unitary representation with the given weights:
//   chi(Hom(Gamma, S^1)) - sum over nonzero a_i of chi(Hom(Gamma, Z/a_i)).
EulerValue chi_s1_rep(const WeightVector& w, const GammaGroup& gamma,
                      const EvalOptions& opts = {});

// Real form W + R^d where W is the real locus of the unitary representation.
// All weights must be nonzero (RejectsZeroWeight). Value:
//   (-1)^d * chi(Hom(Gamma, S^1)) + (-1)^(d+1) * sum chi(Hom(Gamma, Z/a_i))
// i.e. (-1)^d times the unitary value; the alternative composition that also
// adds the unitary value double-counts and is rejected (see the acceptance
// suite, which logs the discrepancy).
EulerValue chi_s1_rep_real(const WeightVector& w, long long d,
                           const GammaGroup& gamma,
                           const EvalOptions& opts = {});

// Closed form for Gamma = Z^l or F_l: -sum |a_i|^l, and with d set (real
// form, weights nonzero) (-1)^(d+1) * sum |a_i|^l. Identical on both kinds.
EulerValue chi_s1_rep_closed(const WeightVector& w, int ell, FreeKind kind,
                             std::optional<long long> d = std::nullopt);

// Unit sphere / closed unit ball of the unitary representation:
//   sphere: sum over nonzero a_i of chi(Hom(Gamma, Z/a_i))
//   ball:   chi(Hom(Gamma, S^1))
EulerValue chi_s1_sphere(const WeightVector& w, const GammaGroup& gamma,
                         const EvalOptions& opts = {});
EulerValue chi_s1_ball(const WeightVector& w, const GammaGroup& gamma,
                       const EvalOptions& opts = {});

// ---- Hom counts into O(2) and dihedral groups --------------------------

// chi(O(2)\Hom(Gamma, O(2))) for Gamma = Z^l (2^(2l-1)) or F_l, l >= 2
// (2^(l-2) * (2^l + 1)). FreeKind::free with l = 1 throws FreeEllOne; the
// caller is expected to have normalized F_1 to Z.
EulerValue chi_o2_hom_closed(int ell, FreeKind kind);

// chi(D_2m\Hom(Gamma, D_2m)), P = 2 for even m else 1:
//   Z^l: (m^l + P^l * (2^(l+1) - 1)) / 2
//   F_l: ((2P)^l + P * m^(l-1) * (2^l - 1) + m^l) / 2
// F_1 is normalized to Z internally (the two agree there).
EulerValue chi_dihedral_hom_closed(long long m, int ell, FreeKind kind);

// ---- O(2) representations ----------------------------------------------

// chi_Gamma(O(2) x V) for the unitary O(2)-representation (real_points must
// be false): chi(O(2)\Hom(Gamma, O(2))) - sum chi(Hom(Gamma, Z/alpha_i)).
// Independent of det_multiplicity.
EulerValue chi_o2_rep(const O2Representation& rep, const GammaGroup& gamma,
                      const EvalOptions& opts = {});

// Real points version (real_points must be true):
//   chi(O(2)\Hom) + ((-1)^d - 1)/2 * chi(Hom(Gamma, S^1))
//   - sum over nonempty I of (-2)^(|I|-1) * chi(D\Hom(Gamma, D)),
//     D = D_2gcd(alpha_I)
//   - sum over two-element I of chi(D\Hom(Gamma, D))
//   + (1 - (-1)^d)/2 * sum chi(Hom(Gamma, Z/alpha_i))
EulerValue chi_o2_real_rep(const O2Representation& rep, const GammaGroup& gamma,
                           const EvalOptions& opts = {});

// Closed forms for Gamma = Z^l / F_l (F_1 normalized to Z):
//   complex: chi(O(2)\Hom) - sum alpha_i^l
//   real:    the chi_o2_real_rep template with chi_dihedral_hom_closed
//            plugged in and the S^1 term vanishing.
EulerValue chi_o2_rep_closed(const O2Representation& rep, int ell, FreeKind kind);
EulerValue chi_o2_real_rep_closed(const O2Representation& rep, int ell,
                                  FreeKind kind);

// ---- Quotient spaces ----------------------------------------------------

// chi_Gamma(G x mu^-1(0)) for the shell of any representation of G: equals
// chi(G\Hom(Gamma, G)), independent of the representation.
EulerValue chi_symplectic_quotient(const IsotropyClass& g, const GammaGroup& gamma,
                                   const EvalOptions& opts = {});

// chi_Gamma(Z/2 x (S^1\V)) = chi(Hom(Gamma, Z/2)).
EulerValue chi_z2_quotient(const GammaGroup& gamma, const EvalOptions& opts = {});

}  // namespace gamma_euler
