#pragma once

#include <stdexcept>
#include <string>

namespace cdindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed permutation, monomial, order spec, u ≰ v.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two permutations of different rank were combined.
class RankMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An AD-polynomial is not the image of any cd-polynomial.
class NotInSubring : public Error {
 public:
  using Error::Error;
};

/// An AD-polynomial has no expansion of the requested shape.
class NotDecomposable : public Error {
 public:
  using Error::Error;
};

/// Integer coefficient arithmetic left the 64-bit range.
class CoefficientOverflow : public Error {
 public:
  using Error::Error;
};

/// |T_M(w,v)| != |T̄_M(w,v)|, so the lexicographic flip does not exist, or a
/// flip value was requested for a path outside the T-set.
class FlipUndefined : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdindex
