#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anchorpath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Text input (scenario or topology) could not be understood or is inconsistent.
/// `line()` is 1-based; 0 means the problem is not tied to one line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    /// Uses `message` as-is; it already names the line.
    struct Verbatim {};
    ParseError(Verbatim, std::size_t line, const std::string& message) : Error(message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace anchorpath
