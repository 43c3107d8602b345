#pragma once

#include <stdexcept>
#include <string>

namespace kfp {

// Invalid mathematical input: a relation fails the partial-order axioms, a map
// is not a morphism of the required kind, mismatched domains, and so on.
struct OrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size or budget bound was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed serialized data or inconsistent coded-dilator data (bad keys,
// shape mismatches, missing action entries).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unparsable grammar input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kfp
