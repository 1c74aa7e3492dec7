#pragma once

#include <stdexcept>
#include <string>

namespace quatdens {

// Enumeration cost would exceed the configured budget. Carries the estimate
// so callers can report it instead of silently truncating.
struct feasibility_error : std::runtime_error {
    double cost;
    double budget;
    feasibility_error(double cost_, double budget_)
        : std::runtime_error("enumeration cost " + std::to_string(cost_) +
                             " exceeds budget " + std::to_string(budget_)),
          cost(cost_), budget(budget_) {}
};

// Mixed-precision arithmetic is an error, never a silent truncation.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct partition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A character sum that should have been rational was not; this always
// indicates an arithmetic bug, never bad input.
struct rationality_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_feasible(double cost, double budget) {
    if (cost > budget) throw feasibility_error(cost, budget);
}

} // namespace quatdens
