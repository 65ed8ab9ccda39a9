#include "metdim/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "metdim/error.hpp"
#include "metdim/rng.hpp"

namespace metdim {

Graph::Graph(int order, const std::vector<Edge>& edges) : order_(order), edge_count_(0) {
    if (order < 2)
        throw Error(ErrorCode::TrivialGraph, "graph order must be at least 2, got " + std::to_string(order));
    if (order > kMaxOrder)
        throw Error(ErrorCode::SizeOutOfRange, "graph order capped at " + std::to_string(kMaxOrder) +
                                                   ", got " + std::to_string(order));
    adj_.assign(order, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw Error(ErrorCode::IndexOutOfRange,
                        "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edge_count_;
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // Connectivity: everything reachable from vertex 0.
    std::vector<char> visited(order, 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != order)
        throw Error(ErrorCode::Disconnected,
                    "only " + std::to_string(reached) + " of " + std::to_string(order) + " vertices reachable");
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (root < 0 || root >= graph.order())
        throw Error(ErrorCode::RootOutOfRange,
                    "root " + std::to_string(root) + " outside 0.." + std::to_string(graph.order() - 1));
}

Graph build_graph(int order, const std::vector<Edge>& edges) { return Graph(order, edges); }

Graph build_graph(const RawGraph& raw) { return Graph(raw.order, raw.edges); }

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm{n, std::vector<int>(static_cast<std::size_t>(n) * n, -1), 0};
    std::deque<int> queue;
    for (int src = 0; src < n; ++src) {
        auto row = dm.entries.begin() + static_cast<std::size_t>(src) * n;
        row[src] = 0;
        queue.assign(1, src);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    dm.diameter = std::max(dm.diameter, row[w]);
                    queue.push_back(w);
                }
            }
        }
    }
    return dm;
}

VertexSet resolving_pair_set(const DistanceMatrix& dm, int u, int v) {
    if (u == v)
        throw Error(ErrorCode::EqualVertices, "R{u,v} needs two distinct vertices, got " + std::to_string(u));
    VertexSet r;
    for (int w = 0; w < dm.order; ++w)
        if (dm.at(u, w) != dm.at(v, w)) r.add(w);
    return r;
}

bool is_resolving_set(const DistanceMatrix& dm, VertexSet w) {
    for (int u = 0; u < dm.order; ++u)
        for (int v = u + 1; v < dm.order; ++v)
            if (!w.intersects(resolving_pair_set(dm, u, v))) return false;
    return true;
}

bool is_end_rooted_path(const RootedGraph& rg) {
    const Graph& g = rg.graph;
    if (g.degree(rg.root) != 1) return false;
    int ends = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 1)
            ++ends;
        else if (d != 2)
            return false;
    }
    // Connected with max degree 2 and exactly two leaves: a path.
    return ends == 2;
}

namespace {

void require_size(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::SizeOutOfRange, what);
}

} // namespace

Graph path(int n) {
    require_size(n >= 2, "path needs n >= 2, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    require_size(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph complete(int n) {
    require_size(n >= 2, "complete graph needs n >= 2, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite(int s, int t) {
    require_size(s >= 1 && t >= 1, "complete bipartite needs s,t >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
    return Graph(s + t, edges);
}

Graph star(int n) {
    require_size(n >= 2, "star needs n >= 2, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

RawGraph empty_graph(int t) {
    require_size(t >= 1, "empty graph needs t >= 1, got " + std::to_string(t));
    return RawGraph{t, {}};
}

RawGraph complete_raw(int n) {
    require_size(n >= 1, "complete raw graph needs n >= 1, got " + std::to_string(n));
    RawGraph out{n, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.edges.emplace_back(i, j);
    return out;
}

RawGraph raw(const Graph& g) { return RawGraph{g.order(), g.edges()}; }

RawGraph disjoint_union(const RawGraph& a, const RawGraph& b) {
    RawGraph out{a.order + b.order, a.edges};
    for (auto [u, v] : b.edges) out.edges.emplace_back(a.order + u, a.order + v);
    return out;
}

RawGraph join(const RawGraph& a, const RawGraph& b) {
    RawGraph out = disjoint_union(a, b);
    for (int u = 0; u < a.order; ++u)
        for (int v = 0; v < b.order; ++v) out.edges.emplace_back(u, a.order + v);
    return out;
}

Graph random_connected_graph(int n, const Rational& edge_probability, std::uint64_t seed) {
    require_size(n >= 2 && n <= kMaxOrder, "random graph order must be in 2..64, got " + std::to_string(n));
    if (edge_probability <= 0 || edge_probability > 1)
        throw Error(ErrorCode::SizeOutOfRange,
                    "edge probability must lie in (0,1], got " + rational_to_string(edge_probability));

    std::mt19937_64 gen(seed);
    const BigInt num = boost::multiprecision::numerator(edge_probability);
    const BigInt den = boost::multiprecision::denominator(edge_probability);
    const auto num64 = num.convert_to<std::uint64_t>();
    const auto den64 = den.convert_to<std::uint64_t>();

    // Uniform random labeled spanning tree by decoding a random Pruefer
    // sequence.
    std::set<Edge> chosen;
    if (n == 2) {
        chosen.insert({0, 1});
    } else {
        std::vector<int> pruefer(n - 2);
        for (int& p : pruefer) p = static_cast<int>(uniform_below(gen, n));
        std::vector<int> degree(n, 1);
        for (int p : pruefer) ++degree[p];
        for (int p : pruefer) {
            for (int leaf = 0; leaf < n; ++leaf) {
                if (degree[leaf] == 1) {
                    chosen.insert({std::min(leaf, p), std::max(leaf, p)});
                    --degree[leaf];
                    --degree[p];
                    break;
                }
            }
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) (a < 0 ? a : b) = v;
        chosen.insert({a, b});
    }

    // Remaining pairs independently with probability num/den, in fixed order.
    std::vector<Edge> edges(chosen.begin(), chosen.end());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (chosen.count({i, j})) continue;
            if (uniform_below(gen, den64) < num64) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int order = -1, edge_count = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') continue;
        if (order < 0) {
            std::istringstream header(line);
            if (!(header >> order >> edge_count) || order < 0 || edge_count < 0)
                throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected header 'n m'");
            std::string extra;
            if (header >> extra)
                throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing tokens after header");
            continue;
        }
        std::istringstream edge_line(line);
        int u, v;
        if (!(edge_line >> u >> v))
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected edge 'u v'");
        std::string extra;
        if (edge_line >> extra)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing tokens after edge");
        edges.emplace_back(u, v);
    }
    if (order < 0) throw Error(ErrorCode::ParseError, "missing 'n m' header line");
    if (static_cast<int>(edges.size()) != edge_count)
        throw Error(ErrorCode::ParseError, "header announces " + std::to_string(edge_count) + " edges, found " +
                                               std::to_string(edges.size()));
    return Graph(order, edges);
}

std::optional<int> parse_root_comment(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string hash, key;
        int value;
        if (fields >> hash && hash == "#" && fields >> key && key == "root" && fields >> value) return value;
    }
    return std::nullopt;
}

std::string to_edge_list(const Graph& g, std::optional<int> root) {
    std::ostringstream out;
    if (root) out << "# root " << *root << "\n";
    out << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

} // namespace metdim
