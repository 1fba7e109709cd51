#pragma once

#include <stdexcept>
#include <string>

namespace interlace {

/// Raised by the text-format parsers (graph, polynomial, matroid, k-expression)
/// with a 1-based line/column position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace interlace
