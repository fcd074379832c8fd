#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text; `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its domain (wrong width, vertex in bag, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size or budget cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Random generation gave up after its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lct
