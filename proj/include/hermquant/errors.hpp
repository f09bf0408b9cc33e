#pragma once

#include <stdexcept>
#include <string>

namespace hermq {

/// A denominator Pochhammer symbol vanished inside a terminating sum.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An iterative method or truncated series did not reach its tolerance.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An index outside the implemented range (e.g. a negative level).
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// The coherent-state tail beyond a truncation is larger than requested.
struct TailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sampled phase-space function lacks the degree hints needed for exact
/// quadrature.
struct HintViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hermq
