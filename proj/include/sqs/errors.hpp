#pragma once

#include <stdexcept>
#include <string>

namespace sqs {

/// A precondition on an operation's arguments does not hold.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A configured enumeration cap was exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed design file. `line` is 1-based; 0 means "whole file".
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace sqs
