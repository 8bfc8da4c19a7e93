#pragma once

#include <stdexcept>
#include <string>

namespace dgs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph-core
struct MalformedGraph6 : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct SizeMismatch : Error {
    using Error::Error;
};

// exact-linalg
struct NonSquare : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};
struct NotOddPrime : Error {
    using Error::Error;
};
struct NotSupported : Error {
    using Error::Error;
};
struct Singular : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// walk-analysis
struct NonIntegralColumn : Error {
    using Error::Error;
};

// certificates and pair tools
struct SingularWalkMatrix : Error {
    using Error::Error;
};
struct NotCospectral : Error {
    using Error::Error;
};
struct VerificationFailed : Error {
    using Error::Error;
};
struct RankHypothesisFailed : Error {
    using Error::Error;
};

// census audit found a certified graph with a cospectral mate; this is an
// implementation bug and must never be reported as a normal result.
struct AuditContradiction : Error {
    using Error::Error;
};

} // namespace dgs
