#pragma once

#include <stdexcept>
#include <string>

namespace icox {

// Input text could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A precondition on user-supplied data was violated (unknown catalog name,
// label outside {2,3,4,6}, malformed matching, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource limit was hit (BFS element cap, coefficient range).
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A certification procedure could not reach a verdict at the configured
// depth. Never swallowed: callers either refine and retry or surface it.
class InconclusiveError : public std::runtime_error {
public:
  explicit InconclusiveError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed on data that passed validation. Indicates
// a bug, not bad input.
class InternalContradiction : public std::logic_error {
public:
  explicit InternalContradiction(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace icox
