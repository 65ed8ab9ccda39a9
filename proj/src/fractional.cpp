#include "metdim/fractional.hpp"

#include <algorithm>

#include "metdim/error.hpp"

namespace metdim {

namespace {

LpProblem system_to_lp(const std::vector<VertexSet>& rows, const std::vector<int>& candidates,
                       const std::vector<int>& var_of_vertex) {
    LpProblem lp;
    lp.num_vars = static_cast<int>(candidates.size());
    lp.objective.assign(lp.num_vars, Rational(1));
    lp.upper_bounds.assign(lp.num_vars, Rational(1));
    for (VertexSet w : rows) {
        std::vector<Rational> row(lp.num_vars, Rational(0));
        for (int v : w.to_vector()) row[var_of_vertex[v]] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(1);
    }
    return lp;
}

} // namespace

FractionalResult fractional_dimension(const PairConstraintSystem& sys) {
    if (sys.infeasible)
        throw Error(ErrorCode::Infeasible, "a constraint row has no candidate witness");

    const std::vector<int> candidates = sys.candidates.to_vector();
    std::vector<int> var_of_vertex(sys.universe, -1);
    for (std::size_t j = 0; j < candidates.size(); ++j)
        var_of_vertex[candidates[j]] = static_cast<int>(j);

    // Solve over the dominance-reduced rows; the certificate extends to the
    // full row set with zero multipliers on dropped rows.
    std::vector<VertexSet> reduced;
    std::vector<int> original_of_reduced;
    for (std::size_t i = 0; i < sys.witnesses.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sys.witnesses.size(); ++j) {
            if (i == j) continue;
            if (sys.witnesses[j].subset_of(sys.witnesses[i]) &&
                (sys.witnesses[j] != sys.witnesses[i] || j < i)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            reduced.push_back(sys.witnesses[i]);
            original_of_reduced.push_back(static_cast<int>(i));
        }
    }

    const LpSolution reduced_sol = rational_lp_solve(system_to_lp(reduced, candidates, var_of_vertex));

    FractionalResult result;
    result.value = reduced_sol.value;
    result.empty_row_convention = sys.witnesses.empty();
    result.witness.weights.assign(sys.universe, Rational(0));
    for (std::size_t j = 0; j < candidates.size(); ++j)
        result.witness.weights[candidates[j]] = reduced_sol.primal[j];
    result.witness.total = 0;
    for (const Rational& w : result.witness.weights) result.witness.total += w;

    result.row_duals.assign(sys.witnesses.size(), Rational(0));
    for (std::size_t k = 0; k < original_of_reduced.size(); ++k)
        result.row_duals[original_of_reduced[k]] = reduced_sol.row_duals[k];
    result.bound_duals.assign(sys.universe, Rational(0));
    for (std::size_t j = 0; j < candidates.size(); ++j)
        result.bound_duals[candidates[j]] = reduced_sol.bound_duals[j];

    // Re-verify the extended certificate against the unreduced system.
    LpSolution full_sol;
    full_sol.status = LpStatus::Optimal;
    full_sol.value = result.value;
    full_sol.primal = reduced_sol.primal;
    full_sol.row_duals.resize(sys.witnesses.size());
    for (std::size_t i = 0; i < sys.witnesses.size(); ++i)
        full_sol.row_duals[i] = result.row_duals[i];
    full_sol.bound_duals = reduced_sol.bound_duals;
    result.certificate_verified =
        verify_lp_certificate(system_to_lp(sys.witnesses, candidates, var_of_vertex), full_sol);
    if (!result.certificate_verified)
        throw Error(ErrorCode::Internal, "dual certificate does not extend to the full row set");

    return result;
}

FractionalResult fractional_metric_dimension(const Graph& g) {
    return fractional_dimension(build_full_system(all_pairs_distances(g)));
}

FractionalResult fractional_rooted_metric_dimension(const RootedGraph& rg) {
    return fractional_dimension(build_rooted_system(rg, all_pairs_distances(rg.graph)));
}

} // namespace metdim
