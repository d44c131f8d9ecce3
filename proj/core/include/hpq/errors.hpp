#pragma once

#include <stdexcept>
#include <string>

namespace hpq {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands belong to different group instances (affine vs finite, or two
/// distinct finite groups).
struct InstanceMismatch : Error {
    using Error::Error;
};

/// Two grid-sampled objects do not share the same grid.
struct GridMismatch : Error {
    using Error::Error;
};

/// A dilation parameter is not on the multiplicative log lattice e^{k*du}.
/// Carries the nearest lattice exponent as a suggestion.
struct LatticeError : Error {
    LatticeError(const std::string& what, int nearest_k)
        : Error(what), nearest_index(nearest_k) {}
    int nearest_index;
};

/// A dual-orbit stabilizer is neither trivial nor the whole acting group.
struct UnsupportedStabilizer : Error {
    using Error::Error;
};

/// A requested exact computation exceeds the configured dimension cap.
struct DimensionCap : Error {
    using Error::Error;
};

/// Malformed user input (config file, CSV, action table).
struct InputError : Error {
    using Error::Error;
};

} // namespace hpq
