#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathsep {

enum class ErrorKind {
  parse,           // malformed input text
  precondition,    // input outside a builder's domain
  invalid_system,  // a path is not a path of the host graph
  not_applicable,  // graph class not covered by any implemented construction
  limit,           // resource limits (oracle size, time budget)
  internal,        // a construction invariant broke; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Throws Error(internal) when cond is false. Used for invariants the constructions guarantee.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::internal, "invariant violated: " + what);
}

}  // namespace pathsep
