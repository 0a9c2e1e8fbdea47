#pragma once

#include <stdexcept>
#include <string>

namespace tdmm {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list, matching, or recipe text.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size or search budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdmm
