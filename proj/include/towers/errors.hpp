#pragma once

#include <stdexcept>
#include <string>

namespace towers {

/// Bad request: unknown name, malformed label, degree over a cap.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Degree above what a tower or route materializes.
struct DegreeCapError : UsageError {
  using UsageError::UsageError;
};

/// A computation produced an inconsistent result (broken relations, failed
/// self-check, inconclusive search).
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace towers
