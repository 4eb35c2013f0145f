#pragma once

#include <stdexcept>
#include <string>

namespace mbqn {

enum class ErrorCode {
    UnknownVertex,
    SelfLoop,
    DuplicateEdge,
    EmptySet,
    AlreadyConsumed,
    MissingEdge,
    NotAPath,
    SizeLimit,
    InvalidArgument,
    OutOfRange,
    Parse,
    Io,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry a 1-based line/column into the offending text.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace mbqn
