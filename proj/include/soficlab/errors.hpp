#ifndef SOFICLAB_ERRORS_HPP
#define SOFICLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace soficlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeMismatch : Error {
  using Error::Error;
};
struct UnknownGenerator : Error {
  using Error::Error;
};
struct MissingTableEntry : Error {
  using Error::Error;
};
// A requested product set exceeds the configured size cap.
struct Overflow : Error {
  using Error::Error;
};
// An instance is too large for the desk-scale guardrails.
struct TooLarge : Error {
  using Error::Error;
};
// Exact rational arithmetic left the 64-bit range even after reduction.
struct RationalOverflow : Error {
  using Error::Error;
};
struct InvalidTable : Error {
  using Error::Error;
};
struct NotWellDefined : Error {
  using Error::Error;
};
struct NotInvariant : Error {
  using Error::Error;
};
struct DeltaTooLarge : Error {
  using Error::Error;
};
struct NoSpectralGap : Error {
  using Error::Error;
};
struct NumericalFailure : Error {
  using Error::Error;
};
struct WindowMismatch : Error {
  using Error::Error;
};
struct WindowNotComposable : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace soficlab

#endif
