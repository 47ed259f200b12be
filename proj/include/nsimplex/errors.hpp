#ifndef NSIMPLEX_ERRORS_HPP
#define NSIMPLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nsimplex {

/// Malformed input file. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line(line), column(column) {}
    int line;
    int column;
};

/// A computation was refused because it would exceed a configured cap.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string msg, unsigned long long requested, unsigned long long cap)
        : std::runtime_error(std::move(msg)), requested(requested), cap(cap) {}
    unsigned long long requested;
    unsigned long long cap;
};

/// A condition that must hold by theorem failed; indicates a bug or bad input
/// violating a caller-asserted precondition.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by a non-invertible element in the rational electric map.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nsimplex

#endif
