#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mteam {

/// Any violated precondition on caller-supplied data: malformed files,
/// unknown variables, arity mismatches, out-of-range thresholds.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace mteam
