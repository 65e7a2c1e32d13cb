#pragma once

#include <iosfwd>
#include <string>

#include "gamma_euler/homs.hpp"

namespace gamma_euler {

struct VerifyReport {
    int checks = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

// Self-check corpora behind the CLI `verify` subcommand. suite is one of
// "groups", "formulas", "strata", "all". One line per check goes to log.
// Throws std::invalid_argument on an unknown suite name.
VerifyReport run_verify_suite(const std::string& suite, const HomBudget& budget,
                              std::ostream& log);

}  // namespace gamma_euler
