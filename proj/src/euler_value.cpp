#include "gamma_euler/euler_value.hpp"

#include <stdexcept>

namespace gamma_euler {

EulerValue exact_div(const EulerValue& num, const EulerValue& den) {
    if (den == 0) throw std::logic_error("exact_div: zero divisor");
    EulerValue q = num / den;
    if (q * den != num)
        throw std::logic_error("exact_div: " + num.str() + " not divisible by " +
                               den.str());
    return q;
}

}  // namespace gamma_euler
