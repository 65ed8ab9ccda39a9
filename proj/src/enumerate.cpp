#include "metdim/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "metdim/error.hpp"

namespace metdim {

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degrees(g.order());
    for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

// Map vertices of a onto b one at a time, extending only when every edge and
// non-edge among mapped vertices matches.
bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map,
                    std::vector<char>& used, int next) {
    const int n = a.order();
    if (next == n) return true;
    for (int candidate = 0; candidate < n; ++candidate) {
        if (used[candidate] || a.degree(next) != b.degree(candidate)) continue;
        bool consistent = true;
        for (int prev = 0; prev < next && consistent; ++prev)
            if (a.adjacent(prev, next) != b.adjacent(map[prev], candidate)) consistent = false;
        if (!consistent) continue;
        map[next] = candidate;
        used[candidate] = 1;
        if (extend_mapping(a, b, map, used, next + 1)) return true;
        used[candidate] = 0;
    }
    return false;
}

// Isomorphism-invariant fingerprint used to bucket graphs before the
// backtracking check: degree sequence plus the multiset of all distances.
std::vector<int> fingerprint(const Graph& g) {
    std::vector<int> key = degree_sequence(g);
    DistanceMatrix dm = all_pairs_distances(g);
    std::vector<int> dists;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) dists.push_back(dm.at(u, v));
    std::sort(dists.begin(), dists.end());
    key.insert(key.end(), dists.begin(), dists.end());
    return key;
}

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    std::vector<int> map(a.order(), -1);
    std::vector<char> used(a.order(), 0);
    return extend_mapping(a, b, map, used, 0);
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 2 || n > 8)
        throw Error(ErrorCode::SizeOutOfRange,
                    "exhaustive enumeration supported for 2 <= n <= 8, got " + std::to_string(n));
    std::vector<Edge> all_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    const int num_pairs = static_cast<int>(all_pairs.size());

    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    std::vector<Graph> representatives;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_pairs); ++mask) {
        std::vector<Edge> edges;
        for (int bit = 0; bit < num_pairs; ++bit)
            if ((mask >> bit) & 1) edges.push_back(all_pairs[bit]);
        if (static_cast<int>(edges.size()) < n - 1) continue;
        try {
            Graph g(n, edges);
            auto& bucket = buckets[fingerprint(g)];
            bool known = false;
            for (std::size_t idx : bucket)
                if (are_isomorphic(g, representatives[idx])) {
                    known = true;
                    break;
                }
            if (!known) {
                bucket.push_back(representatives.size());
                representatives.push_back(std::move(g));
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Disconnected) throw;
        }
    }
    return representatives;
}

bool is_path_graph(const Graph& g) {
    int leaves = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 1)
            ++leaves;
        else if (d != 2)
            return false;
    }
    return leaves == 2;
}

bool is_complete_graph(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

bool is_star_graph(const Graph& g, int* centre_out) {
    if (g.edge_count() != g.order() - 1) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == g.order() - 1) {
            if (centre_out) *centre_out = v;
            return true;
        }
    }
    return false;
}

} // namespace metdim
