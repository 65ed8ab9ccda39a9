#ifndef METDIM_LP_HPP
#define METDIM_LP_HPP

#include <vector>

#include "metdim/rational.hpp"

namespace metdim {

/// minimize c'x  subject to  A x >= b,  0 <= x <= u  (all data rational,
/// every upper bound finite).
struct LpProblem {
    int num_vars = 0;
    std::vector<Rational> objective;            // c, length num_vars
    std::vector<std::vector<Rational>> rows;    // A, dense
    std::vector<Rational> rhs;                  // b
    std::vector<Rational> upper_bounds;         // u, length num_vars
};

enum class LpStatus { Optimal, Infeasible };

/// Exact optimum with a dual certificate. The dual of the problem above is
///   maximize b'y - u'w  subject to  A'y - w <= c,  y >= 0,  w >= 0,
/// and at optimality both objectives coincide exactly.
struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rational value;
    std::vector<Rational> primal;      // x
    std::vector<Rational> row_duals;   // y
    std::vector<Rational> bound_duals; // w
};

/// Bounded-variable primal simplex over exact rationals with Bland's
/// smallest-index anti-cycling rule; deterministic for fixed input. Verifies
/// its own certificate before returning and throws Error(Internal) if strong
/// duality fails. Throws Error(Infeasible) when no feasible point exists.
LpSolution rational_lp_solve(const LpProblem& lp);

/// Exact re-check of primal feasibility, dual feasibility, and equality of
/// the two objectives.
bool verify_lp_certificate(const LpProblem& lp, const LpSolution& sol);

/// Number of (solve, verified-certificate) events since process start; the
/// two counts must always agree.
struct LpCertificateStats {
    std::uint64_t solves = 0;
    std::uint64_t certificates_verified = 0;
};
LpCertificateStats lp_certificate_stats();

} // namespace metdim

#endif
