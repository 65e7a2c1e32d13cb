#pragma once

#include <string>

#include "gamma_euler/gamma_group.hpp"

namespace gamma_euler {

// Textual gamma grammar:
//   "Z" | "Z^<l>"                      free abelian (Z is Z^1)
//   "F<l>"                             free of rank l
//   "fp:<gens>|<relators>"             finite presentation; generators are
//                                      distinct lowercase letters, relator
//                                      words use uppercase for inverses,
//                                      e.g. fp:a,b|aa,bb,abab
// The relator block (with its '|') may be omitted for a free presentation.
// Throws ParseError on malformed input.
GammaGroup parse_gamma_spec(const std::string& text);

// Canonical printer; letters are assigned a, b, c, ... by generator index,
// so parse(print(g)) == g structurally for every representable group
// (presented groups are limited to 26 generators).
std::string print_gamma_spec(const GammaGroup& gamma);

}  // namespace gamma_euler
