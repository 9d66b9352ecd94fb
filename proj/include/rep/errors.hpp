#pragma once

#include <stdexcept>
#include <string>

namespace rep {

// Invalid constructor/function parameters (p out of range, n == 0, ...).
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation applied to an object in the wrong state (e.g. running an engine
// past its declared capacity, or asking for a snapshot before initialization).
struct state_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A scaling regime was requested where it does not apply (e.g. the diffusive
// normalization in the supercritical phase).
struct regime_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Internal cross-check failed (accounting identities that must hold exactly).
// Thrown rather than asserted so release builds keep the protection.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace rep
