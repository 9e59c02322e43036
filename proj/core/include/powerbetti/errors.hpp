#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerbetti {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed ideal text. position is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured cap (lattice size, Taylor generator count, ...) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (k = 0, non-Artinian socle, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold on correct output failed. Indicates
// an engine bug or a series that is too short to have stabilized.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace powerbetti
