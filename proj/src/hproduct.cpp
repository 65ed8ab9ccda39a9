#include "metdim/hproduct.hpp"

#include <string>

#include "metdim/error.hpp"

namespace metdim {

ProductGraph hierarchical_product(const RootedGraph& outer, const RootedGraph& inner) {
    const int n2 = outer.graph.order();
    const int n1 = inner.graph.order();
    if (n2 * n1 > kMaxOrder)
        throw Error(ErrorCode::OrderOverflow, "product order " + std::to_string(n2 * n1) +
                                                  " exceeds the " + std::to_string(kMaxOrder) + "-vertex cap");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n2) * inner.graph.edge_count() + outer.graph.edge_count());
    // Every outer vertex carries a copy of the inner graph.
    for (int x2 = 0; x2 < n2; ++x2)
        for (auto [x1, y1] : inner.graph.edges())
            edges.emplace_back(x2 * n1 + x1, x2 * n1 + y1);
    // Outer edges connect the root-labeled copies only.
    for (auto [x2, y2] : outer.graph.edges())
        edges.emplace_back(x2 * n1 + inner.root, y2 * n1 + inner.root);

    Graph product(n2 * n1, edges);
    DistanceMatrix result_dist = all_pairs_distances(product);
    return ProductGraph{
        RootedGraph(std::move(product), outer.root * n1 + inner.root),
        outer,
        inner,
        all_pairs_distances(outer.graph),
        all_pairs_distances(inner.graph),
        std::move(result_dist),
    };
}

int product_distance(const ProductGraph& p, int a, int b) {
    const int order = p.result.graph.order();
    if (a < 0 || a >= order || b < 0 || b >= order)
        throw Error(ErrorCode::IndexOutOfRange, "product vertex outside 0.." + std::to_string(order - 1));
    auto [x2, x1] = p.decode(a);
    auto [y2, y1] = p.decode(b);
    if (x2 == y2) return p.inner_dist.at(x1, y1);
    return p.outer_dist.at(x2, y2) + p.inner_dist.at(x1, p.inner.root) + p.inner_dist.at(y1, p.inner.root);
}

VertexSet product_resolving_pair_set(const ProductGraph& p, int a, int b) {
    if (a == b)
        throw Error(ErrorCode::EqualVertices, "R{a,b} needs two distinct vertices, got " + std::to_string(a));
    auto [x2, x1] = p.decode(a);
    auto [y2, y1] = p.decode(b);
    if (x2 != y2) return resolving_pair_set(p.result_dist, a, b);

    const VertexSet inner_rset = resolving_pair_set(p.inner_dist, x1, y1);
    if (!inner_rset.contains(p.inner.root)) {
        // Distances to the root agree, so only the shared column separates.
        VertexSet out;
        for (int z : inner_rset.to_vector()) out.add(p.encode(x2, z));
        return out;
    }
    // Root distances differ: everything outside the shared column separates.
    VertexSet out = VertexSet::all(p.result.graph.order());
    for (int z = 0; z < p.inner.graph.order(); ++z)
        if (!inner_rset.contains(z)) out.remove(p.encode(x2, z));
    return out;
}

RootedGraph binomial_tree(int n) {
    if (n < 1 || n > 6)
        throw Error(ErrorCode::SizeOutOfRange, "binomial tree index must be in 1..6, got " + std::to_string(n));
    RootedGraph k2(complete(2), 0);
    return iterated_product(std::vector<RootedGraph>(n, k2));
}

RootedGraph iterated_product(const std::vector<RootedGraph>& factors) {
    if (factors.empty())
        throw Error(ErrorCode::SizeOutOfRange, "iterated product needs at least one factor");
    RootedGraph acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = hierarchical_product(acc, factors[i]).result;
    return acc;
}

} // namespace metdim
