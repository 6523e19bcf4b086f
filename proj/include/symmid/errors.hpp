#ifndef SYMMID_ERRORS_HPP
#define SYMMID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symmid {

// Invalid input or precondition violation (CLI exit code 1).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation exceeded a configured resource cap (CLI exit code 2).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed. These assertions encode facts that hold for
// every valid input, so a violation indicates an implementation bug, never
// user error (CLI exit code 3).
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace symmid

#endif
