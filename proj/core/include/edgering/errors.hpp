#pragma once

#include <stdexcept>
#include <string>

namespace edgering {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: malformed files, invalid parameters, graphs that violate
// an operation's precondition (e.g. disconnected where connected is needed).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A configured size guard was exceeded. Guards are never silently truncated;
// callers either raise the guard or shrink the input.
class GuardError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed. This always indicates a bug, never
// bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind {
    malformed_line,
    loop,
    duplicate_edge,
    vertex_out_of_range,
    isolated_vertex,
};

// Parse failure for the graph file format; carries the 1-based line number
// of the offending line.
class ParseError : public InvalidInput {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& message)
        : InvalidInput("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

}  // namespace edgering
