#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domino {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset (graph6) or a
/// 1-based line number (edge list, DIMACS), as stated by `unit`.
class ParseError : public Error {
public:
    enum class Unit { byte_offset, line };

    ParseError(const std::string& what, std::size_t position, Unit unit)
        : Error(what), position_(position), unit_(unit) {}

    std::size_t position() const noexcept { return position_; }
    Unit unit() const noexcept { return unit_; }

private:
    std::size_t position_;
    Unit unit_;
};

/// A graph parameter was requested outside its domain (e.g. the k-tuple
/// domination number of a graph with minimum degree below k-1).
class UndefinedParameter : public Error {
public:
    using Error::Error;
};

/// A bound or characterization was applied to a graph that does not meet
/// its hypothesis.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// A family builder received parameters that violate the family's rules.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Input exceeds an exhaustive routine's order cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The branch-and-bound node budget ran out before optimality was proven.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t incumbent, std::size_t lower_bound)
        : Error(what), incumbent_(incumbent), lower_bound_(lower_bound) {}

    std::size_t incumbent() const noexcept { return incumbent_; }
    std::size_t lower_bound() const noexcept { return lower_bound_; }
    std::size_t gap() const noexcept { return incumbent_ - lower_bound_; }

private:
    std::size_t incumbent_;
    std::size_t lower_bound_;
};

} // namespace domino
