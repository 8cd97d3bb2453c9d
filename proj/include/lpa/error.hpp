#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpa {

// Base for every error the library reports. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed graph document; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// An operation was called outside its domain (bad sink count, part equal to 1, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// The graph has a directed cycle, so its Leavitt path algebra is infinite-dimensional.
class CycleError : public Error {
public:
  CycleError() : Error("graph has a directed cycle: not finite-dimensional") {}
};

// A 64-bit count would have wrapped.
class OverflowError : public Error {
public:
  using Error::Error;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit overflow in addition");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit overflow in multiplication");
  return out;
}

}  // namespace detail
}  // namespace lpa
