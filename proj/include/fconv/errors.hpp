#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fconv {

/// Out-of-range element or mismatched dimensions.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown catalog or lookup key.
class LookupError : public std::runtime_error {
public:
    explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input. Carries the 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Structural validation failure (tree decompositions, preconditions).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration budget exhausted. Carries a progress report.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t steps_done, int rank_reached)
        : std::runtime_error(what), steps_done_(steps_done), rank_reached_(rank_reached) {}

    std::uint64_t steps_done() const { return steps_done_; }
    int rank_reached() const { return rank_reached_; }

private:
    std::uint64_t steps_done_;
    int rank_reached_;
};

}  // namespace fconv
