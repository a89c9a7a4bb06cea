#pragma once

#include <stdexcept>
#include <string>

namespace findual {

/// A structure failed one of its mathematical invariants. The message carries
/// a concrete witness (the failing pair/triple) for the CLI report.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two computations that are theorems-equal disagreed. Always a bug or a
/// violated precondition, never a recoverable condition.
class cross_check_error : public std::logic_error {
public:
    explicit cross_check_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Malformed input file (missing fields, bad indices, unknown kind).
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace findual
