#pragma once

#include <stdexcept>
#include <string>

namespace multiseq {

// Process exit codes, shared by the CLI and the error taxonomy below.
enum ExitCode : int {
    exit_ok = 0,
    exit_parse_error = 2,
    exit_precondition = 3,
    exit_internal = 4,
};

/// Malformed input text (polynomial grammar, problem file). Carries 1-based
/// line/column of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A violated operation precondition: unit ideal, non-containment, small
/// field, mixed generator degrees, ring mismatch, ...
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal inconsistency: non-stabilization, seed disagreement, degree
/// check failure, arithmetic overflow. Always a bug or a resource cap, never
/// a user mistake.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace multiseq
