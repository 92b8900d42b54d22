#ifndef LIKEJUDGE_SIMPLEX_HPP
#define LIKEJUDGE_SIMPLEX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "likejudge/errors.hpp"

namespace likejudge {

enum class Relation : std::uint8_t { Geq, Eq, Leq };

// A linear condition over world probabilities: sum_w coefficients[w] * p_w
// <relation> bound. Coefficients are dense over the world enumeration.
struct LinearConstraint {
    std::vector<double> coefficients;
    Relation relation = Relation::Geq;
    double bound = 0.0;
};

// Feasibility over the probability simplex: p >= 0 and sum_w p_w = 1 are
// implicit; `constraints` come on top.
struct FeasibilityProblem {
    std::uint32_t world_count = 0;
    std::vector<LinearConstraint> constraints;
};

// True iff some probability vector satisfies every constraint (phase-1
// residual <= kFeasEps). Residuals between kFeasEps and kCmpEps are
// uncertifiable and raise NumericalError rather than guessing.
bool feasible(const FeasibilityProblem& problem);

// Minimum of sum_w objective[w] * p_w over the feasible region.
// Throws InfeasibleError when the region is empty. The region is a subset of
// the simplex, so the minimum always exists.
double minimize(const FeasibilityProblem& problem,
                std::span<const double> objective);

}  // namespace likejudge

#endif
