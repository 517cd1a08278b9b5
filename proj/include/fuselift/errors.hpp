// Error types shared across the library. The CLI maps them to exit codes:
// ParseError -> 2 (malformed input), everything else -> 1 (validation failure).
#pragma once

#include <stdexcept>
#include <string>

namespace fuselift {

// Base for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments to an operation: unknown label, cross-group element, out-of-range value.
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Structurally well-formed data that fails a mathematical consistency check.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Malformed file or text: JSON shape, unparseable fraction, unknown schema.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void fail_domain(const std::string& msg) { throw DomainError(msg); }
[[noreturn]] inline void fail_validation(const std::string& msg) { throw ValidationError(msg); }
[[noreturn]] inline void fail_parse(const std::string& msg) { throw ParseError(msg); }

}  // namespace fuselift
