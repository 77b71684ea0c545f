#pragma once

#include <stdexcept>

namespace qct {

// Search or expansion work exceeded its configured budget.  Signals that the
// instance is too large for the given cap, never that a count is wrong.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// reflect() requires the pivot vertex to have no incoming or no outgoing
// arrows.
struct NotSourceOrSink : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// remove_zero_weight_vertex() precondition failure; the message names the
// violated precondition.
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sequence of dimension vectors failed the Euler-form checks required of an
// exceptional sequence.
struct NotExceptional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pipeline stage produced a value that differs from its closed-form target;
// the message carries the first differing entry.
struct StageMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A reflection produced a negative dimension entry where the pipeline
// requires a genuine dimension vector.
struct ReflectionIllegal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qct
