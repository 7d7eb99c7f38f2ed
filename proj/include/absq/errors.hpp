#pragma once

#include <stdexcept>
#include <string>

namespace absq {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: mismatched grids, invalid parameters, malformed config.
struct ConfigError : Error {
    using Error::Error;
};

/// A spectrum that should represent a real field has a large imaginary
/// residue, or otherwise violates conjugate symmetry.
struct CorruptedSpectrumError : Error {
    using Error::Error;
};

/// Data violates a solvability condition (e.g. nonzero-mean vorticity has
/// no periodic streamfunction).
struct IncompatibleDataError : Error {
    using Error::Error;
};

/// A caller broke a documented precondition (e.g. non-solenoidal velocity
/// passed where a divergence-free field is required).
struct ContractViolationError : Error {
    using Error::Error;
};

/// Buoyancy law evaluation produced a non-finite value.
struct BuoyancyError : Error {
    using Error::Error;
};

/// Snapshot file is not in the expected binary format.
struct SnapshotFormatError : Error {
    using Error::Error;
};

/// The solution left the space of finite states. Carries the simulation
/// time at which the non-finite value was detected; the run driver pairs
/// it with the last finite diagnostics record.
struct BlowUpError : Error {
    double t;
    explicit BlowUpError(double time, const std::string& what_arg)
        : Error(what_arg), t(time) {}
};

}  // namespace absq
