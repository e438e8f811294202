#pragma once

#include <stdexcept>
#include <string>

namespace adehk {

/// Malformed textual input (polynomials, rationals, selectors, matrix files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical consistency check failed: non-integral HK value, parity
/// failure in a split, a fit that does not close, an oracle mismatch.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adehk
