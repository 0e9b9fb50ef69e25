#pragma once

#include <richline/numbers.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace richline {

// Error taxonomy mirrors the CLI exit-code contract:
//   2 spec error, 3 hypothesis violation, 4 richness violation,
//   5 oracle guard, 6 export cap.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid basis specification (bad JSON, failed table axioms,
/// alpha not a root, ...). CLI exit code 2.
struct SpecError : Error {
    using Error::Error;
};

/// Inputs violate the construction hypotheses (r^2 > N, and relatives).
/// CLI exit code 3.
struct HypothesisError : Error {
    using Error::Error;
};

/// N too small for the requested r: a line-family box would be empty.
struct ParamsTooSmallError : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// A constructed line failed the exact richness check. Carries the offending
/// line for reproduction. CLI exit code 4.
struct RichnessError : Error {
    RichnessError(std::string msg, Int index, std::vector<Int> slope,
                  std::vector<Int> intercept, Int count)
        : Error(std::move(msg)),
          line_index(std::move(index)),
          slope(std::move(slope)),
          intercept(std::move(intercept)),
          points_found(std::move(count)) {}

    Int line_index;
    std::vector<Int> slope;
    std::vector<Int> intercept;
    Int points_found;
};

/// Point set too large for the quadratic pair-enumeration oracle.
/// CLI exit code 5.
struct OracleGuardError : Error {
    using Error::Error;
};

/// Materialized export would exceed the row cap. CLI exit code 6.
struct ExportCapError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct ZeroDivisionError : Error {
    using Error::Error;
};

/// The multiplication table has zero divisors: some nonzero element has a
/// singular regular representation.
struct NotAFieldError : Error {
    using Error::Error;
};

struct DegeneratePairError : Error {
    using Error::Error;
};

/// A condition the derivation is supposed to make impossible failed anyway.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace richline
