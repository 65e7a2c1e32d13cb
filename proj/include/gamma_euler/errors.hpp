#pragma once

#include <stdexcept>
#include <string>

namespace gamma_euler {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Candidate count |H|^gens exceeds the enumeration budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// A subset-sum operation was asked to iterate more than 2^20 subsets.
struct SubsetBudgetExceeded : Error {
    using Error::Error;
};

// No formula and no user-supplied value for this gamma/target pair.
struct UnsupportedGamma : Error {
    using Error::Error;
};

// The real-case circle evaluators require every weight to be nonzero.
struct RejectsZeroWeight : Error {
    using Error::Error;
};

// Burnside count did not divide evenly; the hom list was not closed
// under conjugation (or the table is not a group).
struct NonIntegralBurnside : Error {
    using Error::Error;
};

// chi(O(2)\Hom(F_1, O(2))) has no F-branch; F_1 must be normalized to Z.
struct FreeEllOne : Error {
    using Error::Error;
};

// Two independently computed values for the same quantity disagree.
struct CrossCheckMismatch : Error {
    using Error::Error;
};

// Malformed gamma spec / group spec / numeric input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace gamma_euler
