#ifndef METDIM_HPRODUCT_HPP
#define METDIM_HPRODUCT_HPP

#include <utility>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

/// Hierarchical product of two rooted graphs. Vertices of the product are
/// pairs (x2, x1), encoded as x2 * |V(inner)| + x1, so each outer vertex owns
/// a contiguous column of inner copies. (x2,x1) ~ (y2,y1) iff x2 = y2 and
/// {x1,y1} is an inner edge, or x1 = y1 = inner root and {x2,y2} is an outer
/// edge. The product is rooted at (outer root, inner root).
struct ProductGraph {
    RootedGraph result;
    RootedGraph outer;
    RootedGraph inner;
    DistanceMatrix outer_dist;
    DistanceMatrix inner_dist;
    DistanceMatrix result_dist; // BFS on the expanded product

    int encode(int x2, int x1) const { return x2 * inner.graph.order() + x1; }
    std::pair<int, int> decode(int v) const {
        int n1 = inner.graph.order();
        return {v / n1, v % n1};
    }
};

ProductGraph hierarchical_product(const RootedGraph& outer, const RootedGraph& inner);

/// Closed-form distance between product vertices from factor distances only:
/// d(x2x1, y2y1) = d1(x1,y1) when x2 = y2, and
/// d2(x2,y2) + d1(x1,u1) + d1(y1,u1) otherwise.
int product_distance(const ProductGraph& p, int a, int b);

/// R-set of a product pair. For vertices in the same column the closed form
/// is used: the single column {x2 z | z in R1{x1,y1}} when the inner root
/// does not separate the pair, and the complement of {x2 z | z not in
/// R1{x1,y1}} when it does. For distinct columns the set is read off the
/// expanded product's distances.
VertexSet product_resolving_pair_set(const ProductGraph& p, int a, int b);

/// n-fold product of rooted K_2, folded left; a tree on 2^n vertices rooted
/// at vertex 0. n in [1, 6].
RootedGraph binomial_tree(int n);

/// Left-associated fold of hierarchical_product over the factors.
RootedGraph iterated_product(const std::vector<RootedGraph>& factors);

} // namespace metdim

#endif
