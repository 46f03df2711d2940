#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coauthor {

/// Bad user input: unreadable files, malformed records, invalid options.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed line in a JSON-lines input file.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A metric was asked for on a graph or vector where it is undefined
/// (too few nodes, disconnected input, empty intersection, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace coauthor
