#pragma once

#include <stdexcept>
#include <string>

namespace polydisc {

// Numeric routine failed to converge within its budget; callers may retry
// at higher precision or with a larger budget.
struct NumericFailure : std::runtime_error {
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration request exceeds the configured work budget.
struct WorkBudgetExceeded : std::runtime_error {
    WorkBudgetExceeded(const std::string& what, unsigned long long required)
        : std::runtime_error(what), required_ops(required) {}
    unsigned long long required_ops;
};

} // namespace polydisc
