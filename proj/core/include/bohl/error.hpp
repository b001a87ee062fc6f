#pragma once

#include <stdexcept>
#include <string>

namespace bohl {

// Every failure raised by the library derives from bohl::Error. The kind
// lets front ends map failures onto exit codes without string matching.
enum class ErrorKind {
    invalid_input,        // malformed arguments, short windows, bad grids
    hypothesis_not_met,   // e.g. min V_n <= C, V_n <= -2, sign change
    consistency,          // non-constant Wronskian and similar
    dependent_solutions,  // zero Wronskian where independence is required
    diagonal_degenerate,  // vanishing Green diagonal / diagonal function
    positivity_failure,   // a solution expected positive changed sign
    singular_system,      // oracle tridiagonal solve hit a zero pivot
    conjugate_dependence, // u is real up to a global phase
};

[[nodiscard]] const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace bohl
