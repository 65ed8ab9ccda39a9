#ifndef METDIM_FRACTIONAL_HPP
#define METDIM_FRACTIONAL_HPP

#include <vector>

#include "metdim/exact.hpp"
#include "metdim/graph.hpp"
#include "metdim/lp.hpp"
#include "metdim/rational.hpp"

namespace metdim {

/// Vertex weights in [0,1] with their total.
struct WeightFunction {
    std::vector<Rational> weights; // indexed by vertex
    Rational total;
};

struct FractionalResult {
    Rational value;
    WeightFunction witness;
    std::vector<Rational> row_duals;   // one per constraint row of the system
    std::vector<Rational> bound_duals; // one per vertex (for the <= 1 bounds)
    bool certificate_verified = false;
    bool empty_row_convention = false; // value 0 by the vacuous-constraint convention
};

/// Exact optimum of: minimize total weight over candidates subject to
/// weight(witness_i) >= 1 for every row and 0 <= weight <= 1. Dominated rows
/// are dropped before solving; the returned dual certificate extends to the
/// full row set (zero multipliers on dropped rows) and is re-verified against
/// it on every solve.
FractionalResult fractional_dimension(const PairConstraintSystem& sys);

FractionalResult fractional_metric_dimension(const Graph& g);

/// End-rooted paths have no constraint rows; the convention value is 0 with
/// the zero function, flagged in the result.
FractionalResult fractional_rooted_metric_dimension(const RootedGraph& rg);

} // namespace metdim

#endif
