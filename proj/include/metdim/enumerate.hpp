#ifndef METDIM_ENUMERATE_HPP
#define METDIM_ENUMERATE_HPP

#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

/// Brute-force graph isomorphism: degree-sequence prefilter, then
/// backtracking over degree-compatible vertex maps. Intended for desk-scale
/// orders (<= 16 on structured inputs).
bool are_isomorphic(const Graph& a, const Graph& b);

/// All connected graphs of the given order up to isomorphism, one
/// representative each, by filtering every labeled graph. Practical for
/// n <= 6.
std::vector<Graph> connected_graphs_up_to_iso(int n);

bool is_path_graph(const Graph& g);
bool is_complete_graph(const Graph& g);

/// Star K_{1,n-1} test; centre_out receives the centre when present.
bool is_star_graph(const Graph& g, int* centre_out);

} // namespace metdim

#endif
