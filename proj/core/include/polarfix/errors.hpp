#pragma once

#include <stdexcept>
#include <string>

namespace polarfix {

/* Base for everything thrown by the library.  Two broad families matter to
 * callers: representation/dimension problems (RepresentationError) and
 * malformed user input (BadInput).  The CLI maps them to distinct exit codes. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RepresentationError : Error {
  using Error::Error;
};

struct BadInput : Error {
  using Error::Error;
};

struct DimensionMismatch : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct NotSymmetric : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct NotPositiveDefinite : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct SingularOperator : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct UnboundedLp : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct UnsupportedRepresentation : RepresentationError {
  using RepresentationError::RepresentationError;
};

/* Thrown when GC has no closed form in the set's representation family,
 * e.g. a Lorentz cone pushed by a non-unitary map. */
struct UnsupportedPushforward : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct UnboundedSet : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct NotACone : RepresentationError {
  using RepresentationError::RepresentationError;
};

struct ZeroGamma : BadInput {
  using BadInput::BadInput;
};

struct UnknownEntry : BadInput {
  using BadInput::BadInput;
};

struct BadParams : BadInput {
  using BadInput::BadInput;
};

enum class SemiSkewRejection {
  nonzero_trace,
  nonpositive_determinant,
  scaled_rotation,
  wrong_dimension,
};

struct NotSemiSkew : RepresentationError {
  NotSemiSkew(SemiSkewRejection why, const std::string& msg)
      : RepresentationError(msg), reason(why) {}
  SemiSkewRejection reason;
};

}  // namespace polarfix
