#pragma once

#include <stdexcept>
#include <string>

namespace acfp {

/// Malformed external input (code files, word files, signal files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration-guarded checker ran past its configured budget.
/// Never silently degrades into a verdict.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acfp
