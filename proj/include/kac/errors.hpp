#pragma once

#include <stdexcept>
#include <string>

namespace kac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input data (wrong sizes, bad tables, bad files).
struct InputError : Error {
  using Error::Error;
};

/// An argument is outside the mathematical domain of the operation
/// (e.g. a non-positive element passed to support_projection).
struct DomainError : Error {
  using Error::Error;
};

/// A quantity that must round to an integer (or small rational) does not.
struct ToleranceError : Error {
  using Error::Error;
};

/// Numerically ambiguous spectral splitting in the center computation.
struct DegeneracyError : Error {
  using Error::Error;
};

/// A derived object (dual, Hopf attachment) fails its defining checks.
struct ConstructionError : Error {
  using Error::Error;
};

}  // namespace kac
