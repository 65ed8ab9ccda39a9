#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "metdim/enumerate.hpp"
#include "metdim/error.hpp"

using namespace metdim;

namespace {

// Independent count of connected labeled graphs via the classic recurrence
//   C_n = 2^binom(n,2) - sum_{k=1}^{n-1} binom(n-1,k-1) C_k 2^binom(n-k,2).
long long connected_labeled_count(int n) {
    static std::map<int, long long> memo;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    long long total = 1LL << binom(n, 2);
    for (int k = 1; k < n; ++k)
        total -= binom(n - 1, k - 1) * connected_labeled_count(k) * (1LL << binom(n - k, 2));
    return memo[n] = total;
}

long long count_connected_masks(int n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t bit = 0; bit < pairs.size(); ++bit)
            if ((mask >> bit) & 1) edges.push_back(pairs[bit]);
        try {
            Graph g(n, edges);
            ++count;
        } catch (const Error&) {
        }
    }
    return count;
}

} // namespace

TEST_CASE("labeled connected counts match the recurrence") {
    for (int n = 2; n <= 6; ++n) CHECK(count_connected_masks(n) == connected_labeled_count(n));
}

TEST_CASE("isomorphism classes of connected graphs") {
    const std::map<int, std::size_t> expected{{2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}};
    for (auto [n, classes] : expected) {
        const std::vector<Graph> reps = connected_graphs_up_to_iso(n);
        CHECK(reps.size() == classes);
        // Representatives are pairwise non-isomorphic.
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(are_isomorphic(reps[i], reps[j]));
    }
    CHECK_THROWS_AS(connected_graphs_up_to_iso(1), Error);
    CHECK_THROWS_AS(connected_graphs_up_to_iso(9), Error);
}

TEST_CASE("are_isomorphic") {
    CHECK(are_isomorphic(cycle(3), complete(3)));
    CHECK(are_isomorphic(path(5), build_graph(5, {{4, 2}, {2, 0}, {0, 1}, {1, 3}})));
    CHECK_FALSE(are_isomorphic(path(4), star(4)));
    CHECK_FALSE(are_isomorphic(cycle(5), path(5)));

    // Same degree sequence, different structure: the triangular prism has
    // triangles, K_{3,3} has none.
    Graph prism = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(are_isomorphic(prism, complete_bipartite(3, 3)));
    CHECK(are_isomorphic(prism, prism));
}

TEST_CASE("shape predicates") {
    CHECK(is_path_graph(path(2)));
    CHECK(is_path_graph(path(6)));
    CHECK_FALSE(is_path_graph(cycle(5)));
    CHECK_FALSE(is_path_graph(star(4)));

    CHECK(is_complete_graph(complete(5)));
    CHECK(is_complete_graph(path(2)));
    CHECK_FALSE(is_complete_graph(cycle(4)));

    int centre = -1;
    CHECK(is_star_graph(star(5), &centre));
    CHECK(centre == 0);
    CHECK_FALSE(is_star_graph(cycle(4), &centre));
    CHECK_FALSE(is_star_graph(complete(4), &centre));
}
