#pragma once

#include <stdexcept>

namespace weyl {

// Base of everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text, invalid digit/bound/rank, mismatched widths.
struct parse_error : error {
    using error::error;
};

// Value outside the representable range of a profile or index domain.
struct range_error : error {
    using error::error;
};

// Element is not a member of the requested group.
struct membership_error : error {
    using error::error;
};

// Exhaustive operation would exceed the configured element budget.
struct budget_error : error {
    using error::error;
};

} // namespace weyl
