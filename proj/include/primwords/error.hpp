#pragma once

#include <stdexcept>
#include <string>

namespace primwords {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or rational text. The message names the offending token.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (e.g. continued fraction of 1/0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A generator occurs with both signs, so the word cannot be primitive.
class MixedSignsError : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyWordError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace primwords
