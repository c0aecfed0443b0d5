#pragma once

#include <cmath>

namespace psik {

// A bound value with its per-term breakdown.  The terms always sum to
// value, so table generation and debugging never re-derive them.
struct BoundResult {
    double value = 0;
    double disc_term = 0;    // discriminant-proportional part
    double degree_term = 0;  // degree-proportional part
    double const_term = 0;   // field-independent part
    double epsilon_term = 0; // unit-rank correction
    // parameters used
    double x = 0;
    double T = std::nan("");     // nan when the formula has no T
    double kappa = std::nan(""); // nan when the formula has no kappa

    double sum_of_terms() const {
        return disc_term + degree_term + const_term + epsilon_term;
    }
};

} // namespace psik
