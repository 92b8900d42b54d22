#include "likejudge/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace likejudge {

namespace {

constexpr double kPivotTol = 1e-11;

// Dense two-phase simplex, Bland's rule throughout (anti-cycling, so the
// iteration cap only guards against numerical breakdown).
class Tableau {
public:
    Tableau(const FeasibilityProblem& problem) {
        if (problem.world_count == 0) throw DomainError("empty world set");
        const std::size_t w = problem.world_count;
        // Rows: user constraints plus the simplex normalization sum p = 1.
        const std::size_t m = problem.constraints.size() + 1;

        rows_ = m;
        structurals_ = w;
        std::vector<double> rhs(m);
        std::vector<Relation> rel(m);
        std::vector<std::vector<double>> body(m);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const LinearConstraint& c = problem.constraints[i];
            if (c.coefficients.size() != w) {
                throw DomainError("constraint coefficient width mismatch");
            }
            body[i] = c.coefficients;
            rhs[i] = c.bound;
            rel[i] = c.relation;
            for (double v : body[i]) {
                if (!std::isfinite(v)) throw DomainError("non-finite coefficient");
            }
            if (!std::isfinite(rhs[i])) throw DomainError("non-finite bound");
        }
        body[m - 1].assign(w, 1.0);
        rhs[m - 1] = 1.0;
        rel[m - 1] = Relation::Eq;

        // Normalize to nonnegative right-hand sides.
        for (std::size_t i = 0; i < m; ++i) {
            if (rhs[i] < 0) {
                for (double& v : body[i]) v = -v;
                rhs[i] = -rhs[i];
                if (rel[i] == Relation::Geq) rel[i] = Relation::Leq;
                else if (rel[i] == Relation::Leq) rel[i] = Relation::Geq;
            }
        }

        // Column layout: structurals, then slack/surplus, then artificials.
        std::size_t extra = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (rel[i] != Relation::Eq) ++extra;
        }
        std::size_t art = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (rel[i] != Relation::Leq) ++art;  // Geq and Eq need artificials
        }
        cols_ = w + extra + art;
        first_artificial_ = w + extra;
        a_.assign(m * (cols_ + 1), 0.0);
        basis_.assign(m, 0);

        std::size_t next_extra = w;
        std::size_t next_art = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < w; ++j) at(i, j) = body[i][j];
            at(i, cols_) = rhs[i];
            switch (rel[i]) {
                case Relation::Leq:
                    at(i, next_extra) = 1.0;
                    basis_[i] = next_extra++;
                    break;
                case Relation::Geq:
                    at(i, next_extra) = -1.0;
                    ++next_extra;
                    at(i, next_art) = 1.0;
                    basis_[i] = next_art++;
                    break;
                case Relation::Eq:
                    at(i, next_art) = 1.0;
                    basis_[i] = next_art++;
                    break;
            }
        }
    }

    // Returns the phase-1 optimum (total artificial mass).
    double phase1() {
        std::vector<double> cost(cols_, 0.0);
        for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = 1.0;
        run(cost);
        double value = objective_value(cost);
        if (value <= kFeasEps) drive_out_artificials();
        return value;
    }

    double phase2(std::span<const double> objective) {
        std::vector<double> cost(cols_, 0.0);
        for (std::size_t j = 0; j < structurals_ && j < objective.size(); ++j) {
            cost[j] = objective[j];
        }
        run(cost);
        return objective_value(cost);
    }

private:
    double& at(std::size_t i, std::size_t j) { return a_[i * (cols_ + 1) + j]; }
    double at(std::size_t i, std::size_t j) const {
        return a_[i * (cols_ + 1) + j];
    }

    double objective_value(const std::vector<double>& cost) const {
        double v = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) v += cost[basis_[i]] * at(i, cols_);
        return v;
    }

    bool column_allowed(std::size_t j) const {
        // Artificials never re-enter once phase 1 is done; in phase 1 they may
        // only leave, which "entering only when reduced cost < 0" already
        // prevents for the unit-cost artificials.
        return j < first_artificial_ || !ban_artificials_;
    }

    void run(const std::vector<double>& cost) {
        // Reduced cost of column j: cost[j] - sum_i cost[basis_i] * a_ij.
        const std::size_t max_iter = 2000 * (rows_ + cols_ + 10);
        for (std::size_t iter = 0;; ++iter) {
            if (iter > max_iter) {
                throw NumericalError("simplex iteration limit exceeded");
            }
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {  // Bland: lowest index
                if (!column_allowed(j)) continue;
                double rc = cost[j];
                for (std::size_t i = 0; i < rows_; ++i) {
                    rc -= cost[basis_[i]] * at(i, j);
                }
                if (rc < -kCmpEps * 0.01) {  // 1e-9 slack on pricing
                    entering = j;
                    break;
                }
            }
            if (entering == cols_) return;  // optimal

            std::size_t leaving = rows_;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows_; ++i) {
                double coef = at(i, entering);
                if (coef > kPivotTol) {
                    double ratio = at(i, cols_) / coef;
                    if (ratio < best_ratio - kPivotTol ||
                        (ratio < best_ratio + kPivotTol &&
                         (leaving == rows_ || basis_[i] < basis_[leaving]))) {
                        best_ratio = ratio;
                        leaving = i;
                    }
                }
            }
            if (leaving == rows_) {
                // Unbounded: impossible over a subset of the simplex.
                throw NumericalError("simplex detected an unbounded direction");
            }
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        double p = at(row, col);
        for (std::size_t j = 0; j <= cols_; ++j) at(row, j) /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            double f = at(i, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) {
                at(i, j) -= f * at(row, j);
            }
        }
        basis_[row] = col;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            std::size_t col = cols_;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (std::abs(at(i, j)) > kPivotTol) {
                    col = j;
                    break;
                }
            }
            if (col < cols_) {
                pivot(i, col);
            }
            // else: redundant row; the artificial stays basic at value ~0 and
            // is barred from re-entering below.
        }
        ban_artificials_ = true;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t structurals_ = 0;
    std::size_t first_artificial_ = 0;
    bool ban_artificials_ = false;
    std::vector<double> a_;
    std::vector<std::size_t> basis_;
};

}  // namespace

bool feasible(const FeasibilityProblem& problem) {
    Tableau tableau(problem);
    double value = tableau.phase1();
    if (value <= kFeasEps) return true;
    if (value < kCmpEps) {
        throw NumericalError("feasibility undecidable at tolerance");
    }
    return false;
}

double minimize(const FeasibilityProblem& problem,
                std::span<const double> objective) {
    Tableau tableau(problem);
    double value = tableau.phase1();
    if (value > kFeasEps) {
        if (value < kCmpEps) {
            throw NumericalError("feasibility undecidable at tolerance");
        }
        throw InfeasibleError("minimize() on an infeasible problem");
    }
    return tableau.phase2(objective);
}

}  // namespace likejudge
