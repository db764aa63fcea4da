#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumfree {

/// Exact counts. Every desk-scale quantity in this library (MIS counts on at
/// most 128 vertices after loop stripping, sum-free counts with n <= 63) fits;
/// arithmetic that could overflow is checked and throws.
using Count = std::uint64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// The instance is larger than the configured or hard search limit.
struct LimitExceeded : Error {
  using Error::Error;
};

Count checked_mul(Count a, Count b);
Count checked_add(Count a, Count b);

}  // namespace sumfree
