#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Window mismatch, empty window, or out-of-window access.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter values (modulus 0, empty block, non-increasing tuple, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic left the representable range. Raised instead of wrapping around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A generation or search request exceeds its declared resource bound.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed certificate / family / window files.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Syntax or domain error in the set-expression DSL, with byte offset and
/// the token classes that would have been accepted at that point.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message,
             std::vector<std::string> expected)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset),
        message_(message),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string message_;
  std::vector<std::string> expected_;
};

}  // namespace ramsey
