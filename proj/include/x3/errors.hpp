#pragma once

#include <stdexcept>
#include <string>

namespace x3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an arc or edge with equal endpoints
struct LoopArcError : Error {
  using Error::Error;
};

// input exceeds a configured size cap
struct CapExceededError : Error {
  using Error::Error;
};

// supplied k does not match the exact chromatic number
struct ChromaticMismatchError : Error {
  using Error::Error;
};

// supplied coloring is not proper on the required graph
struct ImproperColoringError : Error {
  using Error::Error;
};

// net sizes match none of the construction cases
struct CaseNotCoveredError : Error {
  using Error::Error;
};

struct NotTournamentError : Error {
  using Error::Error;
};

struct TooSmallError : Error {
  using Error::Error;
};

// an edge of the graph to orient has no arc in the host digraph
struct NoOrientationError : Error {
  using Error::Error;
};

// a continuation-arc pool is empty where a choice is required
struct MissingChoiceError : Error {
  using Error::Error;
};

// a certificate piece could not be assembled from the given material
struct ConstructionFailedError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace x3
