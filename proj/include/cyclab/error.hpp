#pragma once

#include <stdexcept>
#include <string>

namespace cyclab {

/* Base class for all library errors. */
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Composition, action or comparison attempted between objects whose ranks or
   underlying models do not match. */
struct RankMismatchError : Error {
  using Error::Error;
};

/* Construction data violates a structural invariant (monotonicity, value
   range, endpoint conditions, table shapes). */
struct InvalidConstructionError : Error {
  using Error::Error;
};

/* Malformed textual input: morphism expressions, rationals, JSON payloads. */
struct ParseError : Error {
  using Error::Error;
};

/* A structure submitted for classification failed its relation audit. */
struct NotCyclicError : Error {
  using Error::Error;
};

/* Element outside the subgroup on which the canonical splitting is defined. */
struct MembershipError : Error {
  using Error::Error;
};

}  // namespace cyclab
