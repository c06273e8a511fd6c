#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace estrada {

/// A builder or operation was called with arguments outside its domain.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input graph does not have the structure an operation requires
/// (for example a non-tree passed to a tree-only routine).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed, e.g. a non-bipartite graph passed to
/// the line-graph identity.
class precondition_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class numerical_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text. Line and column are 1-based; column 0 means the
/// whole line.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace estrada
