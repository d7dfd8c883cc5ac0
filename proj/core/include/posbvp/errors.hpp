#pragma once

#include <stdexcept>
#include <string>

namespace posbvp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The weight never rises above the sign tolerance, so no candidate
// positivity interval exists.
struct NoNonNegativeRegion : Error {
    using Error::Error;
};

// An eigenvalue solve was asked for on an interval where the selected
// weight part is identically zero (below tolerance on the probe grid).
struct WeightVanishes : Error {
    using Error::Error;
};

// Eigenvalue bracketing exceeded the overflow guard before the rotation
// reached its target angle.
struct BracketOverflow : Error {
    using Error::Error;
};

// Near-zero sign classification found neither a definite sign nor a
// witness pair; the caller must declare the class explicitly.
struct InconclusiveClassification : Error {
    using Error::Error;
};

struct ConfigError : Error {
    ConfigError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_number(line) {}
    int line_number;
};

}  // namespace posbvp
