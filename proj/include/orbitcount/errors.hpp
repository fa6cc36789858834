#pragma once

#include <stdexcept>
#include <string>

namespace orbitcount {

// Thrown when a requested computation exceeds a configured size cap.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal consistency check fails (always a bug, never bad input).
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace orbitcount
