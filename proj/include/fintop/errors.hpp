#pragma once

#include <stdexcept>
#include <string>

namespace fintop {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Subspaces need at least one point; there is no empty topological space here.
class EmptySubspaceError : public Error {
public:
    EmptySubspaceError() : Error("subspace carrier must be non-empty") {}
};

/// Raised when composing maps whose middle spaces differ.
class SpaceMismatchError : public Error {
public:
    explicit SpaceMismatchError(const std::string& what) : Error(what) {}
};

/// A sweep or enumeration ran out of its wall-clock allowance.
/// Partial results are intentionally not exposed.
class BudgetExceededError : public Error {
public:
    BudgetExceededError() : Error("wall-clock budget exceeded") {}
};

class UnknownClaimError : public Error {
public:
    explicit UnknownClaimError(const std::string& id)
        : Error("unknown claim id: " + id) {}
};

/// Text input could not be read. line/column are 1-based; column 0 means
/// "whole line".
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : std::string{}) +
                ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A family of subsets failed the topology axioms. The structured witness
/// lives in TopologyError (space.hpp); this carries the formatted message.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace fintop
