#pragma once

#include <stdexcept>
#include <string>

namespace valfactor {

// Bad data crossing the library boundary: malformed documents, schema
// violations, arguments that fail a stated precondition.  The command line
// front end reports these with exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iteration cap was reached before a search finished.  Distinct from
// input_error because the input may be fine and the cap simply too low.
// Reported with exit code 1.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant failed mid-run on input that passed validation.
// Always a bug; never rescued internally.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace valfactor
