#pragma once

#include <stdexcept>

namespace bmec {

// Thrown when a mathematical precondition fails: the requested value is
// undefined, or a formula is only proved for a narrower class of inputs.
// The library refuses rather than extrapolating.
struct MathRefusal : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an enumeration would exceed its configured size budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bmec
