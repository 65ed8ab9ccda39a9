#ifndef METDIM_EXACT_HPP
#define METDIM_EXACT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

/// Covering constraints: a resolving set must intersect every row's witness
/// set, picking only from candidates. Row i / candidate v_j incidence is the
/// 0/1 constraint matrix of the underlying integer program.
struct PairConstraintSystem {
    int universe = 0; // order of the underlying graph
    std::vector<Edge> pairs;
    std::vector<VertexSet> witnesses; // already restricted to candidates
    VertexSet candidates;
    bool infeasible = false; // some witness empty after restriction
};

struct DimensionResult {
    int value = 0;
    VertexSet basis;
    std::uint64_t node_count = 0;
};

/// One row per unordered vertex pair; candidates = all vertices.
PairConstraintSystem build_full_system(const DistanceMatrix& dm);

/// Rows restricted to the pairs equidistant from the root; candidates exclude
/// the root. The row set is empty exactly for end-rooted paths.
PairConstraintSystem build_rooted_system(const RootedGraph& rg, const DistanceMatrix& dm);

/// Exact minimum hitting set by branch and bound. Deterministic: branches on
/// the row with the smallest surviving witness set, vertices in increasing
/// index, pruned by a greedy cover upper bound and a disjoint-row packing
/// lower bound; the reported basis is the lexicographically smallest optimum
/// (compared as sorted index sequences).
DimensionResult solve_min_cover(const PairConstraintSystem& sys);

DimensionResult metric_dimension(const Graph& g);
DimensionResult rooted_metric_dimension(const RootedGraph& rg);

/// Independent oracle: enumerates subsets by increasing cardinality,
/// lexicographic within each cardinality, and checks resolvability straight
/// from the distance matrix. Never touches the constraint-system path.
int brute_force_dimension(const Graph& g);
int brute_force_dimension(const RootedGraph& rg);

/// All minimum resolving sets of g, by exhaustive enumeration (small orders).
std::vector<VertexSet> all_metric_bases(const Graph& g);

} // namespace metdim

#endif
