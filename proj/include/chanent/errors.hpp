#pragma once

#include <stdexcept>
#include <string>

namespace chanent {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand shapes do not match the operation (non-square input, size mismatch, ...).
struct DimensionError : Error {
    using Error::Error;
};

// Input data fails a structural invariant (rows not summing to one, bad density
// operator, malformed serialized channel, ...).
struct ValidationError : Error {
    using Error::Error;
};

// A numerical precondition was violated (non-Hermitian input to the eigensolver,
// negative eigenvalue fed to an entropy, p+q != 1 on the closed-form path).
struct ContractViolation : Error {
    using Error::Error;
};

// Problem size exceeds what the exact solvers are built for.
struct CapacityError : Error {
    using Error::Error;
};

} // namespace chanent
