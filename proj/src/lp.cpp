#include "metdim/lp.hpp"

#include <atomic>
#include <optional>
#include <vector>

#include "metdim/error.hpp"

namespace metdim {

namespace {

std::atomic<std::uint64_t> g_solves{0};
std::atomic<std::uint64_t> g_certificates_verified{0};

enum class VarState { Basic, AtLower, AtUpper };

// Bounded-variable primal simplex on the equality system A x - s (+ z) = b,
// full tableau over exact rationals. Variables carry bounds [0, upper] with
// upper possibly infinite; nonbasic variables sit at a finite bound. Bland's
// smallest-index rule picks both the entering and the leaving variable, so
// the walk never cycles.
class BoundedSimplex {
public:
    BoundedSimplex(const LpProblem& lp) : lp_(lp) {
        const int n = lp.num_vars;
        const int m = static_cast<int>(lp.rows.size());
        num_structural_ = n;
        num_rows_ = m;

        // Warm start: structurals at their upper bounds, which is feasible
        // for covering systems; rows that still fall short get an artificial.
        std::vector<Rational> activity(m, Rational(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (lp.rows[i][j] != 0) activity[i] += lp.rows[i][j] * lp.upper_bounds[j];

        std::vector<int> artificial_row;
        for (int i = 0; i < m; ++i)
            if (activity[i] < lp.rhs[i]) artificial_row.push_back(i);
        first_artificial_ = n + m;
        total_ = n + m + static_cast<int>(artificial_row.size());

        x_.assign(total_, Rational(0));
        upper_.assign(total_, std::nullopt);
        state_.assign(total_, VarState::AtLower);
        for (int j = 0; j < n; ++j) {
            upper_[j] = lp.upper_bounds[j];
            state_[j] = VarState::AtUpper;
            x_[j] = lp.upper_bounds[j];
        }

        tableau_.assign(m, std::vector<Rational>(total_, Rational(0)));
        basis_.assign(m, -1);
        std::vector<int> art_of_row(m, -1);
        for (std::size_t k = 0; k < artificial_row.size(); ++k)
            art_of_row[artificial_row[k]] = first_artificial_ + static_cast<int>(k);

        for (int i = 0; i < m; ++i) {
            const bool needs_artificial = art_of_row[i] >= 0;
            const int sign = needs_artificial ? 1 : -1; // basic column must read +1
            for (int j = 0; j < n; ++j) tableau_[i][j] = sign * lp.rows[i][j];
            tableau_[i][n + i] = -sign;
            if (needs_artificial) {
                tableau_[i][art_of_row[i]] = 1;
                basis_[i] = art_of_row[i];
                x_[basis_[i]] = lp.rhs[i] - activity[i];
            } else {
                basis_[i] = n + i;
                x_[basis_[i]] = activity[i] - lp.rhs[i];
            }
            state_[basis_[i]] = VarState::Basic;
        }
    }

    LpSolution solve() {
        if (first_artificial_ < total_) {
            std::vector<Rational> phase1_cost(total_, Rational(0));
            for (int j = first_artificial_; j < total_; ++j) phase1_cost[j] = 1;
            run(phase1_cost);
            Rational residue(0);
            for (int j = first_artificial_; j < total_; ++j) residue += x_[j];
            if (residue > 0) throw Error(ErrorCode::Infeasible, "phase-1 residue is positive");
            // Pin the artificials at zero for the real phase.
            for (int j = first_artificial_; j < total_; ++j) upper_[j] = Rational(0);
        }

        std::vector<Rational> cost(total_, Rational(0));
        for (int j = 0; j < num_structural_; ++j) cost[j] = lp_.objective[j];
        run(cost);

        LpSolution sol;
        sol.status = LpStatus::Optimal;
        sol.primal.assign(x_.begin(), x_.begin() + num_structural_);
        sol.value = 0;
        for (int j = 0; j < num_structural_; ++j)
            if (lp_.objective[j] != 0) sol.value += lp_.objective[j] * x_[j];
        sol.row_duals.resize(num_rows_);
        for (int i = 0; i < num_rows_; ++i) sol.row_duals[i] = rc_[num_structural_ + i];
        sol.bound_duals.assign(num_structural_, Rational(0));
        for (int j = 0; j < num_structural_; ++j)
            if (state_[j] == VarState::AtUpper && rc_[j] < 0) sol.bound_duals[j] = -rc_[j];
        return sol;
    }

private:
    void run(const std::vector<Rational>& cost) {
        recompute_reduced_costs(cost);
        for (;;) {
            // Entering variable: smallest index violating its bound's
            // optimality condition. Fixed variables (upper == 0) never enter.
            int entering = -1, dir = 0;
            for (int j = 0; j < total_; ++j) {
                if (state_[j] == VarState::Basic) continue;
                if (upper_[j] && *upper_[j] == 0) continue;
                if (state_[j] == VarState::AtLower && rc_[j] < 0) { entering = j; dir = 1; break; }
                if (state_[j] == VarState::AtUpper && rc_[j] > 0) { entering = j; dir = -1; break; }
            }
            if (entering < 0) return;

            // Ratio test including the entering variable's own bound flip;
            // ties resolved toward the smallest variable index.
            std::optional<Rational> best_t;
            int leave_row = -1, leave_var = -1;
            bool leave_to_upper = false;
            if (upper_[entering]) {
                best_t = *upper_[entering];
                leave_var = entering;
            }
            for (int i = 0; i < num_rows_; ++i) {
                const Rational& coeff = tableau_[i][entering];
                if (coeff == 0) continue;
                Rational rate = -dir * coeff; // movement of the row's basic variable
                Rational limit;
                bool to_upper;
                if (rate < 0) {
                    limit = x_[basis_[i]] / -rate;
                    to_upper = false;
                } else {
                    if (!upper_[basis_[i]]) continue;
                    limit = (*upper_[basis_[i]] - x_[basis_[i]]) / rate;
                    to_upper = true;
                }
                if (!best_t || limit < *best_t || (limit == *best_t && basis_[i] < leave_var)) {
                    best_t = limit;
                    leave_row = i;
                    leave_var = basis_[i];
                    leave_to_upper = to_upper;
                }
            }
            if (!best_t) throw Error(ErrorCode::Unbounded, "no blocking bound along the entering direction");

            const Rational t = *best_t;
            if (t != 0) {
                for (int i = 0; i < num_rows_; ++i) {
                    if (tableau_[i][entering] == 0) continue;
                    x_[basis_[i]] += -dir * tableau_[i][entering] * t;
                }
            }
            if (leave_var == entering) {
                // Bound flip, basis unchanged.
                x_[entering] = dir > 0 ? *upper_[entering] : Rational(0);
                state_[entering] = dir > 0 ? VarState::AtUpper : VarState::AtLower;
                continue;
            }

            x_[entering] = dir > 0 ? t : *upper_[entering] - t;
            x_[leave_var] = leave_to_upper ? *upper_[leave_var] : Rational(0);
            state_[leave_var] = leave_to_upper ? VarState::AtUpper : VarState::AtLower;
            state_[entering] = VarState::Basic;
            basis_[leave_row] = entering;
            pivot(leave_row, entering);
        }
    }

    void pivot(int row, int col) {
        std::vector<Rational>& pivot_row = tableau_[row];
        const Rational inv = Rational(1) / pivot_row[col];
        if (inv != 1)
            for (Rational& v : pivot_row)
                if (v != 0) v *= inv;
        for (int i = 0; i < num_rows_; ++i) {
            if (i == row) continue;
            const Rational factor = tableau_[i][col];
            if (factor == 0) continue;
            std::vector<Rational>& target = tableau_[i];
            for (int j = 0; j < total_; ++j)
                if (pivot_row[j] != 0) target[j] -= factor * pivot_row[j];
        }
        const Rational rc_factor = rc_[col];
        if (rc_factor != 0)
            for (int j = 0; j < total_; ++j)
                if (pivot_row[j] != 0) rc_[j] -= rc_factor * pivot_row[j];
    }

    void recompute_reduced_costs(const std::vector<Rational>& cost) {
        rc_ = cost;
        for (int i = 0; i < num_rows_; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j < total_; ++j)
                if (tableau_[i][j] != 0) rc_[j] -= cb * tableau_[i][j];
        }
    }

    const LpProblem& lp_;
    int num_structural_ = 0;
    int num_rows_ = 0;
    int first_artificial_ = 0;
    int total_ = 0;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> rc_;
    std::vector<Rational> x_;
    std::vector<std::optional<Rational>> upper_;
    std::vector<VarState> state_;
    std::vector<int> basis_;
};

void validate_problem(const LpProblem& lp) {
    if (static_cast<int>(lp.objective.size()) != lp.num_vars ||
        static_cast<int>(lp.upper_bounds.size()) != lp.num_vars ||
        lp.rows.size() != lp.rhs.size())
        throw Error(ErrorCode::Internal, "inconsistent LP dimensions");
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.size()) != lp.num_vars)
            throw Error(ErrorCode::Internal, "LP row width disagrees with variable count");
    for (const Rational& u : lp.upper_bounds)
        if (u < 0) throw Error(ErrorCode::Internal, "negative upper bound");
}

} // namespace

bool verify_lp_certificate(const LpProblem& lp, const LpSolution& sol) {
    const int n = lp.num_vars;
    const int m = static_cast<int>(lp.rows.size());
    if (static_cast<int>(sol.primal.size()) != n || static_cast<int>(sol.row_duals.size()) != m ||
        static_cast<int>(sol.bound_duals.size()) != n)
        return false;

    // Primal feasibility.
    for (int j = 0; j < n; ++j)
        if (sol.primal[j] < 0 || sol.primal[j] > lp.upper_bounds[j]) return false;
    for (int i = 0; i < m; ++i) {
        Rational lhs(0);
        for (int j = 0; j < n; ++j)
            if (lp.rows[i][j] != 0) lhs += lp.rows[i][j] * sol.primal[j];
        if (lhs < lp.rhs[i]) return false;
    }

    // Dual feasibility: y, w >= 0 and A'y - w <= c.
    for (int i = 0; i < m; ++i)
        if (sol.row_duals[i] < 0) return false;
    for (int j = 0; j < n; ++j) {
        if (sol.bound_duals[j] < 0) return false;
        Rational lhs(0);
        for (int i = 0; i < m; ++i)
            if (lp.rows[i][j] != 0) lhs += lp.rows[i][j] * sol.row_duals[i];
        if (lhs - sol.bound_duals[j] > lp.objective[j]) return false;
    }

    // Exact strong duality.
    Rational primal_value(0);
    for (int j = 0; j < n; ++j)
        if (lp.objective[j] != 0) primal_value += lp.objective[j] * sol.primal[j];
    Rational dual_value(0);
    for (int i = 0; i < m; ++i)
        if (sol.row_duals[i] != 0) dual_value += lp.rhs[i] * sol.row_duals[i];
    for (int j = 0; j < n; ++j)
        if (sol.bound_duals[j] != 0) dual_value -= lp.upper_bounds[j] * sol.bound_duals[j];
    return primal_value == sol.value && dual_value == sol.value;
}

LpSolution rational_lp_solve(const LpProblem& lp) {
    validate_problem(lp);
    BoundedSimplex simplex(lp);
    LpSolution sol = simplex.solve();
    g_solves.fetch_add(1, std::memory_order_relaxed);
    if (!verify_lp_certificate(lp, sol))
        throw Error(ErrorCode::Internal, "optimal basis fails the exact certificate re-check");
    g_certificates_verified.fetch_add(1, std::memory_order_relaxed);
    return sol;
}

LpCertificateStats lp_certificate_stats() {
    return LpCertificateStats{g_solves.load(), g_certificates_verified.load()};
}

} // namespace metdim
