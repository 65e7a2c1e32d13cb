#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gamma_euler {

// A finite presentation: relators are words in the generators, written as
// sequences of nonzero signed 1-based generator indices (-k = inverse of
// generator k). The empty word is the identity and is rejected as a relator
// input only by convention of validate() being permissive: empty relators are
// allowed and vacuous.
struct Presentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;

    // Throws std::invalid_argument unless generator_count >= 1 and every
    // relator letter idx satisfies 1 <= |idx| <= generator_count.
    void validate() const;

    friend auto operator<=>(const Presentation&, const Presentation&) = default;
};

// The source group Gamma of Hom(Gamma, -). Finitely generated; three
// encodings: free abelian Z^l, free F_l, or an arbitrary finite presentation.
class GammaGroup {
  public:
    enum class Kind { ZPow, Free, Presented };

    static GammaGroup z_pow(int ell);
    static GammaGroup free_group(int ell);
    static GammaGroup presented(Presentation p);

    Kind kind() const { return kind_; }

    // Rank for ZPow/Free; generator count for Presented.
    int generator_count() const;

    // Only valid for Presented.
    const Presentation& presentation() const;

    // Materializes a presentation for any kind: ZPow(l) gets the l*(l-1)/2
    // pairwise commutators, Free(l) gets no relators.
    Presentation to_presentation() const;

    // Structural normalization used before every dispatch on the kind:
    //   Free(1)                          -> ZPow(1)
    //   Presented, no relators           -> Free(g) (then ZPow(1) if g == 1)
    //   Presented, exactly the pairwise
    //   commutators (up to rotation and
    //   inversion), all pairs covered    -> ZPow(g)
    // Everything else is returned unchanged. Guarantees that the two
    // encodings of the same free/free-abelian group evaluate identically,
    // including through the closed-form-only O(2) path.
    GammaGroup canonical() const;

    // Stable structural key of the canonical form; used as a cache/map key.
    std::string structural_key() const;

    friend auto operator<=>(const GammaGroup&, const GammaGroup&) = default;

  private:
    GammaGroup(Kind k, int ell, Presentation p)
        : kind_(k), ell_(ell), presentation_(std::move(p)) {}

    Kind kind_;
    int ell_;  // rank for ZPow/Free; 0 for Presented
    Presentation presentation_;
};

}  // namespace gamma_euler
