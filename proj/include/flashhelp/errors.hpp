#pragma once

#include <stdexcept>
#include <string>

namespace flashhelp {

// Resource guard tripped (e.g. type enumeration too large). CLI exit code 3.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hard invariant failed at runtime (zero-error theorem, residual bound).
// CLI exit code 2.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace flashhelp
