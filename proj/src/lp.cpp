#include "entroute/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace entroute {

namespace {

constexpr double kTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const LpProblem& p) {
    if (p.num_vars <= 0) throw std::invalid_argument("LP needs at least one variable");
    if (static_cast<int>(p.objective.size()) != p.num_vars ||
        static_cast<int>(p.var_bounds.size()) != p.num_vars)
        throw std::invalid_argument("LP vector sizes do not match num_vars");
    for (const auto& [lo, hi] : p.var_bounds) {
        if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("LP bounds must be finite");
        if (lo < 0.0 || hi < lo) throw std::invalid_argument("LP bounds must satisfy 0 <= lower <= upper");
    }
    for (const LpRow& row : p.rows) {
        if (!std::isfinite(row.upper)) throw std::invalid_argument("row bound must be finite");
        for (const auto& [j, c] : row.coeffs) {
            if (j < 0 || j >= p.num_vars) throw std::invalid_argument("row references unknown variable");
            if (!std::isfinite(c)) throw std::invalid_argument("row coefficient must be finite");
        }
    }
}

enum class VarState { basic, at_lower, at_upper };

// Dense-tableau simplex over structurals + slacks + phase-1 artificials.
class Simplex {
public:
    explicit Simplex(const LpProblem& p)
        : n_(p.num_vars), m_(static_cast<int>(p.rows.size())) {
        int total = n_ + m_;
        lower_.assign(total, 0.0);
        upper_.assign(total, kInf);
        for (int j = 0; j < n_; ++j) {
            lower_[j] = p.var_bounds[j].first;
            upper_[j] = p.var_bounds[j].second;
        }
        // original columns (structurals dense per row, slack = identity)
        a_.assign(m_, std::vector<double>(total, 0.0));
        b_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (const auto& [j, c] : p.rows[i].coeffs) a_[i][j] += c;
            a_[i][n_ + i] = 1.0;
            b_[i] = p.rows[i].upper;
        }
        state_.assign(total, VarState::at_lower);
        basic_.resize(m_);

        // slack basis where b - A*lower >= 0, artificials elsewhere
        std::vector<double> residual(b_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) residual[i] -= a_[i][j] * lower_[j];
        tableau_ = a_;
        rhs_ = b_;
        for (int i = 0; i < m_; ++i) {
            if (residual[i] >= 0.0) {
                basic_[i] = n_ + i;
                state_[n_ + i] = VarState::basic;
            } else {
                int art = static_cast<int>(lower_.size());
                lower_.push_back(0.0);
                upper_.push_back(kInf);
                state_.push_back(VarState::basic);
                for (int r = 0; r < m_; ++r) {
                    a_[r].push_back(r == i ? -1.0 : 0.0);
                    tableau_[r].push_back(0.0);
                }
                // invert the row so the artificial's basis column is +e_i
                for (double& v : tableau_[i]) v = -v;
                tableau_[i][art] = 1.0;
                rhs_[i] = -rhs_[i];
                basic_[i] = art;
                artificials_.push_back(art);
            }
        }
    }

    LpStatus run(const std::vector<double>& objective) {
        if (!artificials_.empty()) {
            std::vector<double> phase1(lower_.size(), 0.0);
            for (int art : artificials_) phase1[art] = -1.0;
            LpStatus st = optimize(phase1);
            if (st != LpStatus::optimal) return LpStatus::infeasible;
            double infeas = 0.0;
            std::vector<double> x = solution_point();
            for (int art : artificials_) infeas += std::max(0.0, x[art]);
            if (infeas > 1e-7) return LpStatus::infeasible;
            for (int art : artificials_) upper_[art] = 0.0;  // pin at zero for phase 2
            drive_out_artificials();
        }
        std::vector<double> full(lower_.size(), 0.0);
        std::copy(objective.begin(), objective.end(), full.begin());
        LpStatus st = optimize(full);
        if (st == LpStatus::optimal) refine();
        return st;
    }

    std::vector<double> structural_values() {
        std::vector<double> x = solution_point();
        x.resize(n_);
        return x;
    }

private:
    int total() const { return static_cast<int>(lower_.size()); }

    double nonbasic_value(int j) const { return state_[j] == VarState::at_upper ? upper_[j] : lower_[j]; }

    std::vector<double> basic_values() const {
        std::vector<double> xb(rhs_);
        for (int j = 0; j < total(); ++j) {
            if (state_[j] == VarState::basic) continue;
            double v = nonbasic_value(j);
            if (v == 0.0) continue;
            for (int i = 0; i < m_; ++i) xb[i] -= tableau_[i][j] * v;
        }
        return xb;
    }

    std::vector<double> solution_point() const {
        std::vector<double> x(total());
        for (int j = 0; j < total(); ++j)
            if (state_[j] != VarState::basic) x[j] = nonbasic_value(j);
        std::vector<double> xb = basic_values();
        for (int i = 0; i < m_; ++i) x[basic_[i]] = xb[i];
        return x;
    }

    double reduced_cost(const std::vector<double>& c, int j) const {
        double z = 0.0;
        for (int i = 0; i < m_; ++i) {
            double cb = c[basic_[i]];
            if (cb != 0.0) z += cb * tableau_[i][j];
        }
        return c[j] - z;
    }

    LpStatus optimize(const std::vector<double>& c) {
        const long iteration_cap = 200000;
        for (long iter = 0; iter < iteration_cap; ++iter) {
            // Bland: lowest-index improving nonbasic variable
            int entering = -1;
            bool from_lower = true;
            for (int j = 0; j < total(); ++j) {
                if (state_[j] == VarState::basic) continue;
                if (upper_[j] - lower_[j] < kTol) continue;  // fixed
                double rc = reduced_cost(c, j);
                if (state_[j] == VarState::at_lower && rc > kTol) {
                    entering = j;
                    from_lower = true;
                    break;
                }
                if (state_[j] == VarState::at_upper && rc < -kTol) {
                    entering = j;
                    from_lower = false;
                    break;
                }
            }
            if (entering < 0) return LpStatus::optimal;

            std::vector<double> xb = basic_values();
            double sign = from_lower ? 1.0 : -1.0;  // direction of the entering variable
            // step limits: (t, blocking variable, row, hits_lower)
            double best_t = kInf;
            int leave_row = -2, leave_var = -1;
            bool leave_at_lower = true;
            if (std::isfinite(upper_[entering] - lower_[entering])) {
                best_t = upper_[entering] - lower_[entering];
                leave_row = -1;
                leave_var = entering;
            }
            for (int i = 0; i < m_; ++i) {
                double d = tableau_[i][entering] * sign;  // x_B[i] moves by -d * t
                int bv = basic_[i];
                double t, hits_lower;
                if (d > kTol) {
                    t = (xb[i] - lower_[bv]) / d;
                    hits_lower = true;
                } else if (d < -kTol) {
                    if (!std::isfinite(upper_[bv])) continue;
                    t = (upper_[bv] - xb[i]) / (-d);
                    hits_lower = false;
                } else {
                    continue;
                }
                if (t < 0.0) t = 0.0;  // degenerate
                if (t < best_t - kTol ||
                    (t < best_t + kTol && (leave_var < 0 || bv < leave_var))) {
                    best_t = std::min(best_t, t);
                    leave_row = i;
                    leave_var = bv;
                    leave_at_lower = hits_lower;
                }
            }
            if (leave_row == -2) return LpStatus::unbounded;

            if (leave_row == -1) {
                // bound flip, no basis change
                state_[entering] = from_lower ? VarState::at_upper : VarState::at_lower;
                continue;
            }
            pivot(leave_row, entering);
            state_[entering] = VarState::basic;
            state_[leave_var] = leave_at_lower ? VarState::at_lower : VarState::at_upper;
        }
        throw std::runtime_error("simplex iteration cap exceeded");
    }

    void pivot(int row, int col) {
        double piv = tableau_[row][col];
        for (double& v : tableau_[row]) v /= piv;
        rhs_[row] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            double f = tableau_[i][col];
            if (f == 0.0) continue;
            for (int j = 0; j < total(); ++j) tableau_[i][j] -= f * tableau_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        basic_[row] = col;
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (std::find(artificials_.begin(), artificials_.end(), basic_[i]) == artificials_.end())
                continue;
            for (int j = 0; j < n_ + m_; ++j) {
                if (state_[j] == VarState::basic) continue;
                if (std::abs(tableau_[i][j]) > 1e-7) {
                    int art = basic_[i];
                    pivot(i, j);
                    state_[j] = VarState::basic;
                    state_[art] = VarState::at_lower;
                    break;
                }
            }
            // a row with no pivot candidate is redundant; its artificial stays
            // basic pinned at zero
        }
    }

    // Re-solve B x_B = b - N x_N from the original columns to shed the
    // round-off accumulated by tableau pivots.
    void refine() {
        std::vector<std::vector<double>> mat(m_, std::vector<double>(m_ + 1, 0.0));
        for (int i = 0; i < m_; ++i) {
            for (int k = 0; k < m_; ++k) mat[i][k] = a_[i][basic_[k]];
            double r = b_[i];
            for (int j = 0; j < total(); ++j) {
                if (state_[j] == VarState::basic) continue;
                double v = nonbasic_value(j);
                if (v != 0.0) r -= a_[i][j] * v;
            }
            mat[i][m_] = r;
        }
        // Gaussian elimination with partial pivoting
        for (int col = 0; col < m_; ++col) {
            int best = col;
            for (int i = col + 1; i < m_; ++i)
                if (std::abs(mat[i][col]) > std::abs(mat[best][col])) best = i;
            if (std::abs(mat[best][col]) < 1e-12) return;  // keep tableau values
            std::swap(mat[col], mat[best]);
            for (int i = 0; i < m_; ++i) {
                if (i == col) continue;
                double f = mat[i][col] / mat[col][col];
                if (f == 0.0) continue;
                for (int j = col; j <= m_; ++j) mat[i][j] -= f * mat[col][j];
            }
        }
        std::vector<double> xb(m_);
        for (int i = 0; i < m_; ++i) xb[i] = mat[i][m_] / mat[i][i];
        // write back through rhs_ so basic_values() reproduces xb
        rhs_ = xb;
        for (int j = 0; j < total(); ++j) {
            if (state_[j] == VarState::basic) continue;
            double v = nonbasic_value(j);
            if (v == 0.0) continue;
            for (int i = 0; i < m_; ++i) rhs_[i] += tableau_[i][j] * v;
        }
    }

    int n_, m_;
    std::vector<std::vector<double>> a_;        // original columns
    std::vector<double> b_;                     // original row bounds
    std::vector<std::vector<double>> tableau_;  // B^{-1} A
    std::vector<double> rhs_;                   // B^{-1} b
    std::vector<double> lower_, upper_;
    std::vector<VarState> state_;
    std::vector<int> basic_;
    std::vector<int> artificials_;
};

}  // namespace

FractionalSolution solve_lp(const LpProblem& problem) {
    validate(problem);
    Simplex simplex(problem);
    FractionalSolution out;
    out.status = simplex.run(problem.objective);
    if (out.status != LpStatus::optimal) return out;
    out.values = simplex.structural_values();
    for (int j = 0; j < problem.num_vars; ++j) {
        // shed pivot noise at the box boundary
        const auto& [lo, hi] = problem.var_bounds[j];
        if (out.values[j] < lo) out.values[j] = lo;
        if (out.values[j] > hi) out.values[j] = hi;
        out.objective_value += problem.objective[j] * out.values[j];
    }
    return out;
}

std::string to_lp_text(const LpProblem& problem) {
    std::ostringstream os;
    os << "max:";
    for (int j = 0; j < problem.num_vars; ++j) {
        if (problem.objective[j] == 0.0) continue;
        os << " + " << problem.objective[j] << " x" << j;
    }
    os << "\nsubject to\n";
    for (std::size_t i = 0; i < problem.rows.size(); ++i) {
        os << "  r" << i << ":";
        for (const auto& [j, c] : problem.rows[i].coeffs) os << " + " << c << " x" << j;
        os << " <= " << problem.rows[i].upper << "\n";
    }
    os << "bounds\n";
    for (int j = 0; j < problem.num_vars; ++j)
        os << "  " << problem.var_bounds[j].first << " <= x" << j << " <= "
           << problem.var_bounds[j].second << "\n";
    return os.str();
}

}  // namespace entroute
