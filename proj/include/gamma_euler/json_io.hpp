#pragma once

#include <json.hpp>

#include "gamma_euler/strata.hpp"

namespace gamma_euler {

// Stratification as JSON. Exact values are emitted as decimal strings (they
// parse back to the same EulerValue); subsets are 1-based index arrays.
// Shape per stratum:
//   {"label": {"kind": "s1-piece", "I": [1,2], "J": []},
//    "chi": "-1", "isotropy": "cyclic:2",
//    "zeroed_by": "scalar-circle" | null, "empty": false}
nlohmann::json stratification_to_json(const Stratification& s);

}  // namespace gamma_euler
