#pragma once

#include <stdexcept>
#include <string>

namespace qreact {

// Error taxonomy mirroring the CLI exit-code contract:
//   0 success, 1 property failure, 2 usage, 3 I/O, 4 degenerate math.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments, malformed specs, violated preconditions.  Exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

// Filesystem failures.  Exit code 3.
class IoError : public Error {
public:
    using Error::Error;
};

// Mathematically degenerate results: averaged volume below floor,
// divergent relative entropy.  Exit code 4.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Infinite relative entropy: support(rho1) is not contained in
// support(rho2).  Distinct from numeric overflow.
class SupportViolation : public DegenerateError {
public:
    using DegenerateError::DegenerateError;
};

} // namespace qreact
