#ifndef METDIM_GRAPH_HPP
#define METDIM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metdim/rational.hpp"
#include "metdim/vertex_set.hpp"

namespace metdim {

inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;

/// Simple connected undirected graph on vertices 0..n-1, n in [2, 64].
/// Immutable after construction; construction validates every invariant.
class Graph {
public:
    Graph(int order, const std::vector<Edge>& edges);

    int order() const { return order_; }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;

private:
    int order_;
    int edge_count_;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

struct RootedGraph {
    Graph graph;
    int root;

    RootedGraph(Graph g, int r);
};

/// All-pairs BFS hop distances. Finite everywhere by connectivity.
struct DistanceMatrix {
    int order;
    std::vector<int> entries; // row-major order*order
    int diameter;

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
};

// Unvalidated vertex/edge data, the building block for graph algebra whose
// intermediates may be trivial or disconnected (joins, disjoint unions).
struct RawGraph {
    int order = 0;
    std::vector<Edge> edges;
};

Graph build_graph(int order, const std::vector<Edge>& edges);
Graph build_graph(const RawGraph& raw);

DistanceMatrix all_pairs_distances(const Graph& g);

/// R{u,v}: the vertices whose distance to u and to v differ.
VertexSet resolving_pair_set(const DistanceMatrix& dm, int u, int v);

/// True iff every unordered vertex pair has a witness in w.
bool is_resolving_set(const DistanceMatrix& dm, VertexSet w);

/// True iff the graph is a path and the root is one of its end-vertices.
bool is_end_rooted_path(const RootedGraph& rg);

// Standard families. Canonical numbering: paths and cycles are numbered along
// the walk; complete_bipartite puts the s-side first; star centres vertex 0.
Graph path(int n);              // n >= 2
Graph cycle(int n);             // n >= 3
Graph complete(int n);          // n >= 2
Graph complete_bipartite(int s, int t); // s, t >= 1
Graph star(int n);              // n >= 2, K_{1,n-1} with centre 0

// Graph algebra on raw parts.
RawGraph empty_graph(int t);    // t >= 1, no edges
RawGraph complete_raw(int n);   // n >= 1
RawGraph raw(const Graph& g);
RawGraph disjoint_union(const RawGraph& a, const RawGraph& b);
RawGraph join(const RawGraph& a, const RawGraph& b);

/// Deterministic seeded random connected graph: a uniform random spanning
/// tree (random Pruefer sequence), plus every remaining edge independently
/// with the given probability. edge_probability must lie in (0, 1].
Graph random_connected_graph(int n, const Rational& edge_probability, std::uint64_t seed);

// Edge-list text format: first data line "n m", then m lines "u v" with
// 0-based endpoints; lines whose first non-blank character is '#' are
// comments. A comment of the form "# root R" is recognized by parse_rooted.
Graph parse_edge_list(const std::string& text);
std::optional<int> parse_root_comment(const std::string& text);
std::string to_edge_list(const Graph& g, std::optional<int> root = std::nullopt);

} // namespace metdim

#endif
