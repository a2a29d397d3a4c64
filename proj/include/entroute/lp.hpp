#pragma once

#include <string>
#include <utility>
#include <vector>

namespace entroute {

// One inequality row: sum of coeffs * x <= upper.
struct LpRow {
    std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
    double upper = 0.0;
};

// Maximization problem over box-bounded variables with <= rows. Bounds are
// finite and lower bounds are non-negative.
struct LpProblem {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<std::pair<double, double>> var_bounds;  // [lower, upper]
};

enum class LpStatus { optimal, infeasible, unbounded };

struct FractionalSolution {
    std::vector<double> values;
    double objective_value = 0.0;
    LpStatus status = LpStatus::infeasible;
};

// Two-phase primal simplex with bounded variables and Bland's anti-cycling
// rule; fully deterministic for identical input. When the status is optimal
// the returned point is a vertex maximizing the objective.
FractionalSolution solve_lp(const LpProblem& problem);

// Plain-text dump for debugging.
std::string to_lp_text(const LpProblem& problem);

}  // namespace entroute
