#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "metdim/enumerate.hpp"
#include "metdim/error.hpp"
#include "metdim/hproduct.hpp"

using namespace metdim;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Internal;
}

RootedGraph k2_rooted() { return RootedGraph(complete(2), 0); }

std::vector<int> sorted_distance_multiset(const Graph& g) {
    DistanceMatrix dm = all_pairs_distances(g);
    std::vector<int> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) out.push_back(dm.at(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("product of two rooted K_2 is the four-vertex path") {
    ProductGraph p = hierarchical_product(k2_rooted(), k2_rooted());
    CHECK(p.result.graph.order() == 4);
    CHECK(p.result.root == 0);
    // Expanding the edge rule by hand gives the path 1-0-2-3.
    std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}};
    CHECK(p.result.graph.edges() == expected);
    CHECK(p.result.graph.degree(1) == 1);
    CHECK(p.result.graph.degree(0) == 2);
}

TEST_CASE("product basics") {
    ProductGraph p = hierarchical_product(k2_rooted(), RootedGraph(path(3), 0));
    CHECK(p.result.graph.order() == 6);
    CHECK(p.result.graph.edge_count() == 5);
    CHECK(p.result.root == 0);

    for (auto [n2, n1] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {4, 3}}) {
        ProductGraph q =
            hierarchical_product(RootedGraph(cycle(std::max(n2, 3)), 0), RootedGraph(path(n1), 1));
        CHECK(q.result.graph.order() == std::max(n2, 3) * n1);
    }

    CHECK(code_of([] {
              hierarchical_product(RootedGraph(complete(9), 0), RootedGraph(complete(8), 0));
          }) == ErrorCode::OrderOverflow);
}

TEST_CASE("product edge rule holds structurally") {
    ProductGraph p = hierarchical_product(RootedGraph(cycle(4), 2), RootedGraph(path(3), 1));
    const Graph& g = p.result.graph;
    for (int a = 0; a < g.order(); ++a) {
        auto [x2, x1] = p.decode(a);
        for (int b = 0; b < g.order(); ++b) {
            if (a == b) continue;
            auto [y2, y1] = p.decode(b);
            bool inner_edge = x2 == y2 && p.inner.graph.adjacent(x1, y1);
            bool outer_edge =
                x1 == y1 && x1 == p.inner.root && p.outer.graph.adjacent(x2, y2);
            CHECK(g.adjacent(a, b) == (inner_edge || outer_edge));
        }
    }
}

TEST_CASE("product_distance closed form") {
    ProductGraph p = hierarchical_product(RootedGraph(cycle(3), 0), k2_rooted());
    CHECK(product_distance(p, 2, 2) == 0);
    // Root-column vertices are at pure outer distance.
    CHECK(product_distance(p, p.encode(1, 0), p.encode(2, 0)) == 1);
    // Hand expansion: one outer hop plus two unit offsets from the inner root.
    CHECK(product_distance(p, p.encode(1, 1), p.encode(2, 1)) == 3);

    CHECK(code_of([&] { product_distance(p, 0, 6); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { product_distance(p, -1, 0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("product_distance equals BFS on the expanded product") {
    std::vector<std::pair<RootedGraph, RootedGraph>> cases;
    cases.emplace_back(RootedGraph(cycle(8), 3), RootedGraph(path(8), 2));
    cases.emplace_back(RootedGraph(complete(7), 1), RootedGraph(star(8), 0));
    cases.emplace_back(RootedGraph(random_connected_graph(8, Rational(1, 2), 17), 5),
                       RootedGraph(random_connected_graph(8, Rational(1, 3), 18), 2));
    for (const auto& [outer, inner] : cases) {
        ProductGraph p = hierarchical_product(outer, inner);
        for (int a = 0; a < p.result.graph.order(); ++a)
            for (int b = 0; b < p.result.graph.order(); ++b)
                CHECK(product_distance(p, a, b) == p.result_dist.at(a, b));
    }
}

TEST_CASE("product R-sets, same-column closed form") {
    // Inner root distances to the pair differ: complement form covers all.
    ProductGraph p = hierarchical_product(k2_rooted(), RootedGraph(path(3), 0));
    VertexSet r = product_resolving_pair_set(p, p.encode(0, 1), p.encode(0, 2));
    CHECK(r == VertexSet::all(6)); // R_{P3}{1,2} is all of P3, nothing removed

    // Inner root equidistant from the pair: the set stays in one column.
    ProductGraph q = hierarchical_product(k2_rooted(), RootedGraph(path(3), 1));
    VertexSet confined = product_resolving_pair_set(q, q.encode(0, 0), q.encode(0, 2));
    VertexSet expected;
    expected.add(q.encode(0, 0));
    expected.add(q.encode(0, 2));
    CHECK(confined == expected);

    CHECK(code_of([&] { product_resolving_pair_set(p, 3, 3); }) == ErrorCode::EqualVertices);
}

TEST_CASE("product R-sets equal BFS-derived sets; column pairs hit everywhere") {
    std::vector<std::pair<RootedGraph, RootedGraph>> cases;
    cases.emplace_back(RootedGraph(cycle(5), 1), RootedGraph(complete(4), 2));
    cases.emplace_back(RootedGraph(path(6), 3), RootedGraph(cycle(6), 0));
    cases.emplace_back(RootedGraph(random_connected_graph(6, Rational(1, 2), 23), 0),
                       RootedGraph(random_connected_graph(6, Rational(1, 2), 29), 4));
    for (const auto& [outer, inner] : cases) {
        ProductGraph p = hierarchical_product(outer, inner);
        const int order = p.result.graph.order();
        for (int a = 0; a < order; ++a) {
            for (int b = a + 1; b < order; ++b) {
                VertexSet bfs = resolving_pair_set(p.result_dist, a, b);
                CHECK(product_resolving_pair_set(p, a, b) == bfs);
                auto [x2, x1] = p.decode(a);
                auto [y2, y1] = p.decode(b);
                if (x2 != y2)
                    for (int z = 0; z < p.inner.graph.order(); ++z)
                        CHECK((bfs.contains(p.encode(x2, z)) || bfs.contains(p.encode(y2, z))));
            }
        }
    }
}

TEST_CASE("binomial trees") {
    RootedGraph t1 = binomial_tree(1);
    CHECK(t1.graph.order() == 2);
    CHECK(t1.root == 0);

    RootedGraph t2 = binomial_tree(2);
    CHECK(is_path_graph(t2.graph));
    CHECK(t2.graph.order() == 4);

    RootedGraph t3 = binomial_tree(3);
    CHECK(t3.graph.order() == 8);
    CHECK(t3.graph.edge_count() == 7);

    for (int n = 1; n <= 6; ++n) {
        RootedGraph t = binomial_tree(n);
        CHECK(t.graph.order() == (1 << n));
        CHECK(t.graph.edge_count() == (1 << n) - 1); // connected + n-1 edges = tree
    }

    CHECK(code_of([] { binomial_tree(0); }) == ErrorCode::SizeOutOfRange);
    CHECK(code_of([] { binomial_tree(7); }) == ErrorCode::SizeOutOfRange);
}

TEST_CASE("iterated product") {
    RootedGraph single = iterated_product({RootedGraph(cycle(5), 2)});
    CHECK(single.graph.edges() == cycle(5).edges());
    CHECK(single.root == 2);

    RootedGraph folded = iterated_product({k2_rooted(), k2_rooted(), k2_rooted()});
    RootedGraph t3 = binomial_tree(3);
    CHECK(folded.graph.edges() == t3.graph.edges());
    CHECK(folded.root == t3.root);

    CHECK(code_of([] { iterated_product({}); }) == ErrorCode::SizeOutOfRange);
}

TEST_CASE("product bracketing changes only the labeling") {
    RootedGraph a = k2_rooted();
    RootedGraph b(path(3), 1);
    RootedGraph c = k2_rooted();

    RootedGraph left = hierarchical_product(hierarchical_product(a, b).result, c).result;
    RootedGraph right = hierarchical_product(a, hierarchical_product(b, c).result).result;
    CHECK(left.graph.order() == 12);
    CHECK(sorted_distance_multiset(left.graph) == sorted_distance_multiset(right.graph));
    CHECK(are_isomorphic(left.graph, right.graph));

    // A second mix with distinct factors, still within the isomorphism cap.
    RootedGraph d(cycle(3), 0);
    RootedGraph left2 = hierarchical_product(hierarchical_product(d, a).result, b).result;
    RootedGraph right2 = hierarchical_product(d, hierarchical_product(a, b).result).result;
    CHECK(sorted_distance_multiset(left2.graph) == sorted_distance_multiset(right2.graph));
    CHECK(are_isomorphic(left2.graph, right2.graph));
}
