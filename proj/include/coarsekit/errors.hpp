#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coarsekit {

/// Bad arguments: invalid vertex ids, negative parameters, broken preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact search refused because the instance exceeds its configured size limit.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph / weights text. Carries the 1-based line and 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", offset " +
                           std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// A runtime self-check failed. Always a bug in this library, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define COARSEKIT_ASSERT(cond, msg)                                                    \
  do {                                                                                 \
    if (!(cond)) {                                                                     \
      throw ::coarsekit::InternalError(std::string("assertion failed: ") + (msg) +    \
                                       " [" #cond "]");                               \
    }                                                                                  \
  } while (false)

}  // namespace coarsekit
