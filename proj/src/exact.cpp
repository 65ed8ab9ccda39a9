#include "metdim/exact.hpp"

#include <algorithm>
#include <string>

#include "metdim/error.hpp"

namespace metdim {

namespace {

// Lexicographic k-combinations of items; f may return true to stop early.
template <class F>
bool for_each_combination(const std::vector<int>& items, int k, F&& f) {
    const int n = static_cast<int>(items.size());
    if (k > n) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> pick(k);
    for (;;) {
        for (int i = 0; i < k; ++i) pick[i] = items[idx[i]];
        if (f(pick)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Deletes rows whose witness set contains another row's (set-cover dominance;
// equal sets keep the earliest). Feasible covers are unchanged.
std::vector<VertexSet> drop_dominated_rows(const std::vector<VertexSet>& rows) {
    const std::size_t m = rows.size();
    std::vector<char> keep(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || !keep[j]) continue;
            if (rows[j].subset_of(rows[i]) && (rows[j] != rows[i] || j < i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<VertexSet> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        if (keep[i]) out.push_back(rows[i]);
    return out;
}

VertexSet greedy_cover(const std::vector<VertexSet>& rows, VertexSet candidates) {
    VertexSet cover;
    std::vector<char> hit(rows.size(), 0);
    std::size_t remaining = rows.size();
    while (remaining > 0) {
        int best_vertex = -1, best_gain = -1;
        for (int v : candidates.to_vector()) {
            int gain = 0;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (!hit[r] && rows[r].contains(v)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_vertex = v;
            }
        }
        cover.add(best_vertex);
        candidates.remove(best_vertex);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!hit[r] && rows[r].contains(best_vertex)) {
                hit[r] = 1;
                --remaining;
            }
    }
    return cover;
}

// Search over the reduced system. Rows are immutable witness masks; node
// state is the list of uncovered row indices plus the still-allowed vertices.
class CoverSearch {
public:
    CoverSearch(std::vector<VertexSet> rows, VertexSet candidates)
        : rows_(std::move(rows)), candidates_(candidates) {}

    std::uint64_t nodes() const { return nodes_; }

    // Exact minimum, seeded with the greedy upper bound.
    int optimum(std::vector<int>* incumbent_out) {
        incumbent_ = VertexSet();
        for (int v : greedy_cover(rows_, candidates_).to_vector()) incumbent_.add(v);
        best_ = incumbent_.count();
        std::vector<int> all_rows(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) all_rows[i] = static_cast<int>(i);
        path_.clear();
        descend(all_rows, candidates_, 0);
        if (incumbent_out) *incumbent_out = incumbent_.to_vector();
        return best_;
    }

    // First cover of size <= budget drawn from allowed, or empty result.
    // Used by the lexicographic reconstruction.
    bool find_cover(const std::vector<int>& uncovered, VertexSet allowed, int budget,
                    std::vector<int>* cover_out) {
        found_.clear();
        if (!decide(uncovered, allowed, budget)) return false;
        if (cover_out) *cover_out = found_;
        return true;
    }

    // Row indices not hit by v.
    std::vector<int> survivors(const std::vector<int>& uncovered, int v) const {
        std::vector<int> out;
        out.reserve(uncovered.size());
        for (int r : uncovered)
            if (!rows_[r].contains(v)) out.push_back(r);
        return out;
    }

    int packing_bound(const std::vector<int>& uncovered, VertexSet allowed) const {
        // Pairwise-disjoint effective witness sets each need their own vertex.
        std::vector<VertexSet> effective;
        effective.reserve(uncovered.size());
        for (int r : uncovered) {
            VertexSet w = rows_[r] & allowed;
            if (!w.empty()) effective.push_back(w);
        }
        std::sort(effective.begin(), effective.end(),
                  [](VertexSet a, VertexSet b) { return a.count() < b.count(); });
        VertexSet used;
        int packed = 0;
        for (VertexSet w : effective) {
            if (!w.intersects(used)) {
                used |= w;
                ++packed;
            }
        }
        return packed;
    }

private:
    void descend(const std::vector<int>& uncovered, VertexSet allowed, int depth) {
        ++nodes_;
        if (uncovered.empty()) {
            if (depth < best_) {
                best_ = depth;
                incumbent_ = VertexSet();
                for (int v : path_) incumbent_.add(v);
            }
            return;
        }
        if (depth >= best_) return;
        if (depth + packing_bound(uncovered, allowed) >= best_) return;

        int branch_row = pick_branch_row(uncovered, allowed);
        if (branch_row < 0) return; // some row lost all its witnesses
        VertexSet options = rows_[branch_row] & allowed;
        for (int v : options.to_vector()) {
            path_.push_back(v);
            descend(survivors(uncovered, v), allowed, depth + 1);
            path_.pop_back();
            allowed.remove(v); // later branches must cover the row without v
        }
    }

    bool decide(const std::vector<int>& uncovered, VertexSet allowed, int budget) {
        ++nodes_;
        if (uncovered.empty()) return true;
        if (budget <= 0) return false;
        if (packing_bound(uncovered, allowed) > budget) return false;
        int branch_row = pick_branch_row(uncovered, allowed);
        if (branch_row < 0) return false;
        VertexSet options = rows_[branch_row] & allowed;
        for (int v : options.to_vector()) {
            found_.push_back(v);
            if (decide(survivors(uncovered, v), allowed, budget - 1)) return true;
            found_.pop_back();
            allowed.remove(v);
        }
        return false;
    }

    int pick_branch_row(const std::vector<int>& uncovered, VertexSet allowed) const {
        int best_row = -1, best_size = kMaxOrder + 1;
        for (int r : uncovered) {
            int size = (rows_[r] & allowed).count();
            if (size == 0) return -1;
            if (size < best_size) {
                best_size = size;
                best_row = r;
            }
        }
        return best_row;
    }

    std::vector<VertexSet> rows_;
    VertexSet candidates_;
    int best_ = 0;
    VertexSet incumbent_;
    std::vector<int> path_;
    std::vector<int> found_;
    std::uint64_t nodes_ = 0;
};

} // namespace

PairConstraintSystem build_full_system(const DistanceMatrix& dm) {
    PairConstraintSystem sys;
    sys.universe = dm.order;
    sys.candidates = VertexSet::all(dm.order);
    for (int u = 0; u < dm.order; ++u) {
        for (int v = u + 1; v < dm.order; ++v) {
            sys.pairs.emplace_back(u, v);
            sys.witnesses.push_back(resolving_pair_set(dm, u, v) & sys.candidates);
            if (sys.witnesses.back().empty()) sys.infeasible = true;
        }
    }
    return sys;
}

PairConstraintSystem build_rooted_system(const RootedGraph& rg, const DistanceMatrix& dm) {
    PairConstraintSystem sys;
    sys.universe = dm.order;
    sys.candidates = VertexSet::all(dm.order);
    sys.candidates.remove(rg.root);
    for (int u = 0; u < dm.order; ++u) {
        for (int v = u + 1; v < dm.order; ++v) {
            if (dm.at(u, rg.root) != dm.at(v, rg.root)) continue;
            sys.pairs.emplace_back(u, v);
            sys.witnesses.push_back(resolving_pair_set(dm, u, v) & sys.candidates);
            if (sys.witnesses.back().empty()) sys.infeasible = true;
        }
    }
    return sys;
}

DimensionResult solve_min_cover(const PairConstraintSystem& sys) {
    if (sys.infeasible)
        throw Error(ErrorCode::Infeasible, "a constraint row has no candidate witness");
    if (sys.witnesses.empty()) return DimensionResult{0, VertexSet(), 0};

    std::vector<VertexSet> rows = drop_dominated_rows(sys.witnesses);
    VertexSet candidates;
    for (VertexSet w : rows) candidates |= w; // vertices in no row never help
    candidates &= sys.candidates;

    CoverSearch search(rows, candidates);
    std::vector<int> incumbent;
    const int value = search.optimum(&incumbent);

    // Lexicographically smallest optimal basis: fix the smallest feasible
    // vertex at each position, reusing the incumbent as the known completion.
    std::vector<int> basis_vertices;
    std::vector<int> uncovered(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) uncovered[i] = static_cast<int>(i);
    VertexSet allowed = candidates;
    std::sort(incumbent.begin(), incumbent.end());
    for (int position = 0; position < value; ++position) {
        int known_next = incumbent[position];
        int floor = basis_vertices.empty() ? 0 : basis_vertices.back() + 1;
        for (int v = floor; v <= known_next; ++v) {
            if (!allowed.contains(v)) continue;
            if (v == known_next) break; // the known completion already starts here
            VertexSet tail_allowed = allowed;
            for (int w = floor; w <= v; ++w) tail_allowed.remove(w);
            std::vector<int> completion;
            if (search.find_cover(search.survivors(uncovered, v), tail_allowed,
                                  value - position - 1, &completion)) {
                if (static_cast<int>(completion.size()) != value - position - 1)
                    throw Error(ErrorCode::Internal, "completion shorter than the proven optimum");
                std::sort(completion.begin(), completion.end());
                incumbent.resize(position);
                incumbent.push_back(v);
                incumbent.insert(incumbent.end(), completion.begin(), completion.end());
                known_next = v;
                break;
            }
        }
        basis_vertices.push_back(known_next);
        uncovered = search.survivors(uncovered, known_next);
        for (int w = floor; w <= known_next; ++w) allowed.remove(w);
    }

    VertexSet basis;
    for (int v : basis_vertices) basis.add(v);

    // Post-check against the unreduced system.
    if (basis.count() != value)
        throw Error(ErrorCode::Internal, "basis cardinality disagrees with optimum");
    for (VertexSet w : sys.witnesses)
        if (!basis.intersects(w))
            throw Error(ErrorCode::Internal, "reported basis misses a constraint row");

    return DimensionResult{value, basis, search.nodes()};
}

DimensionResult metric_dimension(const Graph& g) {
    DistanceMatrix dm = all_pairs_distances(g);
    DimensionResult res = solve_min_cover(build_full_system(dm));
    if (!is_resolving_set(dm, res.basis))
        throw Error(ErrorCode::Internal, "metric basis fails the resolving-set check");
    return res;
}

DimensionResult rooted_metric_dimension(const RootedGraph& rg) {
    DistanceMatrix dm = all_pairs_distances(rg.graph);
    DimensionResult res = solve_min_cover(build_rooted_system(rg, dm));
    VertexSet with_root = res.basis;
    with_root.add(rg.root);
    if (!is_resolving_set(dm, with_root))
        throw Error(ErrorCode::Internal, "rooted basis plus root fails the resolving-set check");
    return res;
}

int brute_force_dimension(const Graph& g) {
    const DistanceMatrix dm = all_pairs_distances(g);
    std::vector<int> vertices(g.order());
    for (int v = 0; v < g.order(); ++v) vertices[v] = v;
    for (int k = 1; k <= g.order(); ++k) {
        bool found = for_each_combination(vertices, k, [&](const std::vector<int>& pick) {
            VertexSet w;
            for (int v : pick) w.add(v);
            return is_resolving_set(dm, w);
        });
        if (found) return k;
    }
    throw Error(ErrorCode::Internal, "no resolving set found, yet V(G) always resolves");
}

int brute_force_dimension(const RootedGraph& rg) {
    const DistanceMatrix dm = all_pairs_distances(rg.graph);
    std::vector<int> others;
    for (int v = 0; v < rg.graph.order(); ++v)
        if (v != rg.root) others.push_back(v);
    for (int k = 0; k <= static_cast<int>(others.size()); ++k) {
        bool found = for_each_combination(others, k, [&](const std::vector<int>& pick) {
            VertexSet w = VertexSet::single(rg.root);
            for (int v : pick) w.add(v);
            return is_resolving_set(dm, w);
        });
        if (found) return k;
    }
    throw Error(ErrorCode::Internal, "no rooted resolving set found");
}

std::vector<VertexSet> all_metric_bases(const Graph& g) {
    const DistanceMatrix dm = all_pairs_distances(g);
    const int k = brute_force_dimension(g);
    std::vector<int> vertices(g.order());
    for (int v = 0; v < g.order(); ++v) vertices[v] = v;
    std::vector<VertexSet> bases;
    for_each_combination(vertices, k, [&](const std::vector<int>& pick) {
        VertexSet w;
        for (int v : pick) w.add(v);
        if (is_resolving_set(dm, w)) bases.push_back(w);
        return false;
    });
    return bases;
}

} // namespace metdim
