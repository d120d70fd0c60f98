#pragma once

#include <stdexcept>
#include <string>

namespace nctd {

// Malformed input: bad vertex ids, unparsable files, violated preconditions
// that the caller controls.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured cap (search nodes, exact treedepth size, canonicalization
// size) was hit. Never to be confused with a "no" answer.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A kernel solution could not be lifted to a verified map on the original
// instance. Indicates a soundness bug, not bad input.
class LiftingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One of the planar constructions exceeded its size bound or met a clashing
// pair it cannot repair; the input graph was not planar.
class PlanarityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nctd
