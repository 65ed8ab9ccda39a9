#include "metdim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>

#include "metdim/error.hpp"
#include "metdim/exact.hpp"
#include "metdim/fractional.hpp"
#include "metdim/enumerate.hpp"
#include "metdim/rng.hpp"

namespace metdim {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::ordered_json describe_pair(const RootedGraph& outer, const RootedGraph& inner) {
    return nlohmann::ordered_json{{"outer", describe_rooted(outer)}, {"inner", describe_rooted(inner)}};
}

RootedGraph draw_rooted_graph(std::mt19937_64& gen, int min_order, int max_order) {
    const int order = min_order + static_cast<int>(uniform_below(gen, max_order - min_order + 1));
    const std::uint64_t graph_seed = gen();
    Graph g = random_connected_graph(order, Rational(1, 2), graph_seed);
    const int root = static_cast<int>(uniform_below(gen, order));
    return RootedGraph(std::move(g), root);
}

// Inner factors for the product identities must not be end-rooted paths.
RootedGraph draw_non_path_inner(std::mt19937_64& gen, int max_order, std::int64_t& skipped) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        RootedGraph rg = draw_rooted_graph(gen, 2, max_order);
        if (!is_end_rooted_path(rg)) return rg;
        ++skipped;
    }
    throw Error(ErrorCode::HypothesisViolated,
                "could not draw an inner factor that is not an end-rooted path");
}

// Members of the dim = n-2 characterization: complete bipartite graphs,
// complete-plus-null joins, and complete-plus-(K_1 u K_t) joins of order n.
std::vector<Graph> dimension_n_minus_2_family(int n) {
    std::vector<Graph> members;
    for (int s = 1; s < n; ++s) {
        int t = n - s;
        if (s <= t) members.push_back(complete_bipartite(s, t));
    }
    for (int s = 1; s <= n - 2; ++s) {
        int t = n - s;
        if (t >= 2) members.push_back(build_graph(join(complete_raw(s), empty_graph(t))));
    }
    for (int s = 1; s <= n - 2; ++s) {
        int t = n - s - 1;
        if (t >= 1)
            members.push_back(
                build_graph(join(complete_raw(s), disjoint_union(complete_raw(1), complete_raw(t)))));
    }
    return members;
}

bool in_dimension_n_minus_2_family(const Graph& g, const std::vector<Graph>& members) {
    for (const Graph& m : members)
        if (are_isomorphic(g, m)) return true;
    return false;
}

} // namespace

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json failure_list = nlohmann::ordered_json::array();
    for (const FailureRecord& f : failures)
        failure_list.push_back({{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
    nlohmann::ordered_json j{{"statement_id", statement_id},
                     {"instances_checked", instances_checked},
                     {"skipped", skipped},
                     {"failures", failure_list},
                     {"elapsed_ms", elapsed_ms}};
    if (!note.empty()) j["note"] = note;
    return j;
}

nlohmann::ordered_json describe_rooted(const RootedGraph& rg) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : rg.graph.edges()) edges.push_back({u, v});
    return nlohmann::ordered_json{{"order", rg.graph.order()}, {"edges", edges}, {"root", rg.root}};
}

std::optional<FailureRecord> check_product_dim_identity(const RootedGraph& outer,
                                                        const RootedGraph& inner) {
    ProductGraph p = hierarchical_product(outer, inner);
    const int product_dim = metric_dimension(p.result.graph).value;
    const int factor_side = outer.graph.order() * rooted_metric_dimension(inner).value;
    if (product_dim == factor_side) return std::nullopt;
    return FailureRecord{describe_pair(outer, inner),
                         "dim(product) = " + std::to_string(factor_side),
                         "dim(product) = " + std::to_string(product_dim)};
}

std::optional<FailureRecord> check_product_fdim_identity(const RootedGraph& outer,
                                                         const RootedGraph& inner) {
    ProductGraph p = hierarchical_product(outer, inner);
    const Rational product_fdim = fractional_metric_dimension(p.result.graph).value;
    const Rational factor_side =
        Rational(outer.graph.order()) * fractional_rooted_metric_dimension(inner).value;
    if (product_fdim == factor_side) return std::nullopt;
    return FailureRecord{describe_pair(outer, inner),
                         "dim_f(product) = " + rational_to_string(factor_side),
                         "dim_f(product) = " + rational_to_string(product_fdim)};
}

std::vector<FailureRecord> check_lower_bound_lemmas(const RootedGraph& outer,
                                                    const RootedGraph& inner) {
    std::vector<FailureRecord> failures;
    ProductGraph p = hierarchical_product(outer, inner);

    const int product_rdim = rooted_metric_dimension(p.result).value;
    const int integer_floor = outer.graph.order() * rooted_metric_dimension(inner).value;
    if (product_rdim < integer_floor) {
        nlohmann::ordered_json instance = describe_pair(outer, inner);
        instance["side"] = "integer";
        failures.push_back(FailureRecord{instance,
                                         "rdim(product) >= " + std::to_string(integer_floor),
                                         "rdim(product) = " + std::to_string(product_rdim)});
    }

    if (!is_end_rooted_path(inner)) {
        const Rational product_frdim = fractional_rooted_metric_dimension(p.result).value;
        const Rational fractional_floor =
            Rational(outer.graph.order()) * fractional_rooted_metric_dimension(inner).value;
        if (product_frdim < fractional_floor) {
            nlohmann::ordered_json instance = describe_pair(outer, inner);
            instance["side"] = "fractional";
            failures.push_back(
                FailureRecord{instance,
                              "rdim_f(product) >= " + rational_to_string(fractional_floor),
                              "rdim_f(product) = " + rational_to_string(product_frdim)});
        }
    }
    return failures;
}

std::vector<FailureRecord> check_product_distances(const ProductGraph& p) {
    std::vector<FailureRecord> failures;
    const int order = p.result.graph.order();
    for (int a = 0; a < order; ++a) {
        for (int b = a + 1; b < order; ++b) {
            const int closed_form = product_distance(p, a, b);
            const int bfs = p.result_dist.at(a, b);
            if (closed_form != bfs) {
                nlohmann::ordered_json instance = describe_pair(p.outer, p.inner);
                instance["pair"] = {a, b};
                failures.push_back(FailureRecord{instance, "distance " + std::to_string(bfs),
                                                 "distance " + std::to_string(closed_form)});
            }
        }
    }
    return failures;
}

std::vector<FailureRecord> check_product_rsets(const ProductGraph& p) {
    std::vector<FailureRecord> failures;
    const int order = p.result.graph.order();
    for (int a = 0; a < order; ++a) {
        for (int b = a + 1; b < order; ++b) {
            auto [x2, x1] = p.decode(a);
            auto [y2, y1] = p.decode(b);
            const VertexSet bfs_set = resolving_pair_set(p.result_dist, a, b);
            if (x2 == y2) {
                const VertexSet closed_form = product_resolving_pair_set(p, a, b);
                if (closed_form != bfs_set) {
                    nlohmann::ordered_json instance = describe_pair(p.outer, p.inner);
                    instance["pair"] = {a, b};
                    failures.push_back(
                        FailureRecord{instance, "R-set mask " + std::to_string(bfs_set.bits()),
                                      "R-set mask " + std::to_string(closed_form.bits())});
                }
            } else {
                // Every inner vertex must witness the pair in one of the two
                // columns.
                for (int z = 0; z < p.inner.graph.order(); ++z) {
                    if (bfs_set.contains(p.encode(x2, z)) || bfs_set.contains(p.encode(y2, z)))
                        continue;
                    nlohmann::ordered_json instance = describe_pair(p.outer, p.inner);
                    instance["pair"] = {a, b};
                    instance["column_vertex"] = z;
                    failures.push_back(FailureRecord{
                        instance, "one of the column copies of z intersects the R-set",
                        "neither copy is in the R-set"});
                }
            }
        }
    }
    return failures;
}

namespace {

void require_non_path_inner(const RootedGraph& inner) {
    if (is_end_rooted_path(inner))
        throw Error(ErrorCode::HypothesisViolated,
                    "the inner factor is a path rooted at one of its end-vertices");
}

} // namespace

VerificationReport verify_product_dim(const RootedGraph& outer, const RootedGraph& inner) {
    require_non_path_inner(inner);
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Thm-2.6";
    report.instances_checked = 1;
    if (auto failure = check_product_dim_identity(outer, inner)) report.failures.push_back(*failure);
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_product_fdim(const RootedGraph& outer, const RootedGraph& inner) {
    require_non_path_inner(inner);
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Thm-3.3";
    report.note = "checked in its fractional reading: dim_f(product) = |V(outer)| * rdim_f(inner); "
                  "the integer reading coincides with Thm-2.6";
    report.instances_checked = 1;
    if (auto failure = check_product_fdim_identity(outer, inner)) report.failures.push_back(*failure);
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_lower_bound_lemmas(const RootedGraph& outer, const RootedGraph& inner) {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Lower-bound-lemmas";
    report.instances_checked = 1;
    if (is_end_rooted_path(inner)) report.skipped = 1; // fractional side not applicable
    for (auto& failure : check_lower_bound_lemmas(outer, inner)) report.failures.push_back(failure);
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_path_product(const RootedGraph& g, int n_max) {
    const int order = g.graph.order();
    if (n_max < 1 || order * (n_max + 1) > kMaxOrder)
        throw Error(ErrorCode::SizeOutOfRange,
                    "path products up to n_max+1 = " + std::to_string(n_max + 1) +
                        " exceed the vertex cap for order " + std::to_string(order));

    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Path-products";

    const DistanceMatrix dm = all_pairs_distances(g.graph);
    const int diameter = dm.diameter;

    // Values for n = 1..n_max+1; the product with a one-vertex path is the
    // graph itself.
    std::vector<int> dims(n_max + 2);
    std::vector<Rational> fdims(n_max + 2);
    for (int n = 1; n <= n_max + 1; ++n) {
        if (n == 1) {
            dims[n] = metric_dimension(g.graph).value;
            fdims[n] = fractional_metric_dimension(g.graph).value;
        } else {
            ProductGraph p = hierarchical_product(g, RootedGraph(path(n), 0));
            dims[n] = metric_dimension(p.result.graph).value;
            fdims[n] = fractional_metric_dimension(p.result.graph).value;
        }
    }

    auto fail = [&](int n, const std::string& expected, const std::string& actual) {
        nlohmann::ordered_json instance = describe_rooted(g);
        instance["path_length"] = n;
        report.failures.push_back(FailureRecord{instance, expected, actual});
    };

    const Rational half_order(order, 2);
    for (int n = 1; n <= n_max; ++n) {
        ++report.instances_checked;
        if (n <= diameter - 1 && dims[n] > dims[n + 1])
            fail(n, "dim nondecreasing below the diameter",
                 std::to_string(dims[n]) + " > " + std::to_string(dims[n + 1]));
        if (n >= diameter && dims[n] != dims[n + 1])
            fail(n, "dim stable from the diameter on",
                 std::to_string(dims[n]) + " != " + std::to_string(dims[n + 1]));
        if (!(dims[1] <= dims[n] && dims[n] <= order - 1))
            fail(n, "dim(G) <= dim(G x P_n) <= |V(G)|-1", std::to_string(dims[n]));
        if (!(fdims[1] <= fdims[n] && fdims[n] <= fdims[n + 1] && fdims[n + 1] <= half_order))
            fail(n, "dim_f(G) <= dim_f(G x P_n) <= dim_f(G x P_{n+1}) <= |V(G)|/2",
                 rational_to_string(fdims[n]) + ", " + rational_to_string(fdims[n + 1]));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_small_graph_characterizations(int n) {
    if (n < 2 || n > 5)
        throw Error(ErrorCode::SizeOutOfRange,
                    "characterizations are enumerated for orders 2..5, got " + std::to_string(n));
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Characterizations-n" + std::to_string(n);

    const std::vector<Graph> classes = connected_graphs_up_to_iso(n);
    const std::vector<Graph> family = n >= 4 ? dimension_n_minus_2_family(n) : std::vector<Graph>{};

    for (const Graph& g : classes) {
        ++report.instances_checked;
        nlohmann::ordered_json instance = describe_rooted(RootedGraph(g, 0));
        instance.erase("root");
        auto fail = [&](const std::string& expected, const std::string& actual,
                        std::optional<int> root = std::nullopt) {
            nlohmann::ordered_json inst = instance;
            if (root) inst["root"] = *root;
            report.failures.push_back(FailureRecord{inst, expected, actual});
        };

        const int dim = metric_dimension(g).value;
        if (!(1 <= dim && dim <= n - 1))
            fail("1 <= dim <= n-1", "dim = " + std::to_string(dim));
        if ((dim == 1) != is_path_graph(g))
            fail("dim = 1 exactly for paths", "dim = " + std::to_string(dim));
        if ((dim == n - 1) != is_complete_graph(g))
            fail("dim = n-1 exactly for complete graphs", "dim = " + std::to_string(dim));
        if (n >= 4 && (dim == n - 2) != in_dimension_n_minus_2_family(g, family))
            fail("dim = n-2 exactly for the bipartite/join families", "dim = " + std::to_string(dim));

        const std::vector<VertexSet> bases = all_metric_bases(g);
        int centre = -1;
        const bool star_shaped = is_star_graph(g, &centre);
        for (int root = 0; root < n; ++root) {
            const int rdim = rooted_metric_dimension(RootedGraph(g, root)).value;
            if (!(0 <= rdim && rdim <= n - 2))
                fail("0 <= rdim <= n-2", "rdim = " + std::to_string(rdim), root);
            if ((rdim == 0) != is_end_rooted_path(RootedGraph(g, root)))
                fail("rdim = 0 exactly for end-rooted paths", "rdim = " + std::to_string(rdim), root);
            const bool extremal = is_complete_graph(g) || (star_shaped && root == centre);
            if ((rdim == n - 2) != extremal)
                fail("rdim = n-2 exactly for complete graphs and centre-rooted stars",
                     "rdim = " + std::to_string(rdim), root);
            bool some_basis_has_root = false;
            for (VertexSet basis : bases)
                if (basis.contains(root)) some_basis_has_root = true;
            const int expected_rdim = some_basis_has_root ? dim - 1 : dim;
            if (rdim != expected_rdim)
                fail("rdim = dim-1 when some metric basis contains the root, else dim",
                     "rdim = " + std::to_string(rdim) + ", dim = " + std::to_string(dim), root);
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_binomial_trees(int n_max) {
    if (n_max < 2 || n_max > 5)
        throw Error(ErrorCode::SizeOutOfRange,
                    "binomial trees are verified for 2 <= n <= 5, got " + std::to_string(n_max));
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Binomial-trees";

    for (int n = 2; n <= n_max; ++n) {
        ++report.instances_checked;
        const RootedGraph tree = binomial_tree(n);
        const int expected = 1 << (n - 2);
        nlohmann::ordered_json instance = describe_rooted(tree);
        instance["tree_index"] = n;

        const int solver_dim = metric_dimension(tree.graph).value;
        if (solver_dim != expected)
            report.failures.push_back(FailureRecord{instance, "dim = " + std::to_string(expected),
                                                    "dim = " + std::to_string(solver_dim)});
        if (tree.graph.order() <= 16) {
            const int oracle_dim = brute_force_dimension(tree.graph);
            if (oracle_dim != expected)
                report.failures.push_back(FailureRecord{instance,
                                                        "brute-force dim = " + std::to_string(expected),
                                                        "brute-force dim = " + std::to_string(oracle_dim)});
        }
        const Rational fdim = fractional_metric_dimension(tree.graph).value;
        if (fdim != expected)
            report.failures.push_back(FailureRecord{instance, "dim_f = " + std::to_string(expected),
                                                    "dim_f = " + rational_to_string(fdim)});
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_product_dim_randomized(const SuiteParams& params) {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Thm-2.6";
    std::mt19937_64 gen(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        RootedGraph outer = draw_rooted_graph(gen, 2, params.max_outer);
        RootedGraph inner = draw_non_path_inner(gen, params.max_inner, report.skipped);
        ++report.instances_checked;
        if (auto failure = check_product_dim_identity(outer, inner))
            report.failures.push_back(*failure);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_product_fdim_randomized(const SuiteParams& params) {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Thm-3.3";
    report.note = "checked in its fractional reading: dim_f(product) = |V(outer)| * rdim_f(inner); "
                  "the integer reading coincides with Thm-2.6";
    std::mt19937_64 gen(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        RootedGraph outer = draw_rooted_graph(gen, 2, params.max_outer);
        RootedGraph inner = draw_non_path_inner(gen, params.max_inner, report.skipped);
        ++report.instances_checked;
        if (auto failure = check_product_fdim_identity(outer, inner))
            report.failures.push_back(*failure);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_lower_bound_lemmas_randomized(const SuiteParams& params) {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Lower-bound-lemmas";
    std::mt19937_64 gen(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        RootedGraph outer = draw_rooted_graph(gen, 2, params.max_outer);
        RootedGraph inner = draw_rooted_graph(gen, 2, params.max_inner);
        ++report.instances_checked;
        if (is_end_rooted_path(inner)) ++report.skipped; // fractional side skipped
        for (auto& failure : check_lower_bound_lemmas(outer, inner))
            report.failures.push_back(failure);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_product_distance_randomized(const SuiteParams& params) {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Eq-1";
    std::mt19937_64 gen(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        RootedGraph outer = draw_rooted_graph(gen, 2, params.max_inner);
        RootedGraph inner = draw_rooted_graph(gen, 2, params.max_inner);
        ++report.instances_checked;
        ProductGraph p = hierarchical_product(outer, inner);
        for (auto& failure : check_product_distances(p)) report.failures.push_back(failure);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_product_rsets_randomized(const SuiteParams& params) {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Lemma-2.5";
    std::mt19937_64 gen(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        RootedGraph outer = draw_rooted_graph(gen, 2, params.max_inner);
        RootedGraph inner = draw_rooted_graph(gen, 2, params.max_inner);
        ++report.instances_checked;
        ProductGraph p = hierarchical_product(outer, inner);
        for (auto& failure : check_product_rsets(p)) report.failures.push_back(failure);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_path_products_randomized(const SuiteParams& params) {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Path-products-random";
    std::mt19937_64 gen(params.seed);
    for (int trial = 0; trial < params.trials; ++trial) {
        RootedGraph g = draw_rooted_graph(gen, 2, std::min(params.max_inner, 6));
        const int diameter = all_pairs_distances(g.graph).diameter;
        const int cap = kMaxOrder / g.graph.order() - 1;
        const int n_max = std::min(diameter + 2, cap);
        VerificationReport sub = verify_path_product(g, n_max);
        report.instances_checked += sub.instances_checked;
        for (auto& failure : sub.failures) report.failures.push_back(failure);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_fixed_path_products() {
    const auto start = Clock::now();
    VerificationReport report;
    report.statement_id = "Path-products-fixed";

    auto product_with_path = [](const RootedGraph& g, int n) {
        return hierarchical_product(g, RootedGraph(path(n), 0)).result;
    };

    // dim(K_m x P_n) = m-1 and dim_f = m/2.
    for (int m = 2; m <= 5; ++m) {
        RootedGraph base(complete(m), 0);
        for (int n = 1; n <= 4; ++n) {
            ++report.instances_checked;
            const Graph& g = n == 1 ? base.graph : product_with_path(base, n).graph;
            nlohmann::ordered_json instance{{"family", "complete"}, {"m", m}, {"path_length", n}};
            const int dim = metric_dimension(g).value;
            if (dim != m - 1)
                report.failures.push_back(FailureRecord{instance, "dim = " + std::to_string(m - 1),
                                                        "dim = " + std::to_string(dim)});
            const Rational fdim = fractional_metric_dimension(g).value;
            if (fdim != Rational(m, 2))
                report.failures.push_back(FailureRecord{instance,
                                                        "dim_f = " + rational_to_string(Rational(m, 2)),
                                                        "dim_f = " + rational_to_string(fdim)});
        }
    }

    // dim(P_m x P_n) = 2 for internally rooted P_m; dim(C_m x P_n) = 2.
    for (int m = 3; m <= 5; ++m) {
        RootedGraph path_base(path(m), 1);
        RootedGraph cycle_base(cycle(m), 0);
        for (int n = 2; n <= 4; ++n) {
            for (const RootedGraph* base : {&path_base, &cycle_base}) {
                ++report.instances_checked;
                const int dim = metric_dimension(product_with_path(*base, n).graph).value;
                if (dim != 2) {
                    nlohmann::ordered_json instance{
                        {"family", base == &path_base ? "path" : "cycle"}, {"m", m}, {"path_length", n}};
                    report.failures.push_back(
                        FailureRecord{instance, "dim = 2", "dim = " + std::to_string(dim)});
                }
            }
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_randomized_suite(const SuiteParams& params) {
    const auto start = Clock::now();
    VerificationReport merged;
    merged.statement_id = "Randomized-suite";
    const VerificationReport parts[] = {
        verify_product_dim_randomized(params),
        verify_product_fdim_randomized(params),
        verify_lower_bound_lemmas_randomized(params),
        verify_product_distance_randomized(params),
        verify_product_rsets_randomized(params),
        verify_path_products_randomized(params),
    };
    for (const VerificationReport& part : parts) {
        merged.instances_checked += part.instances_checked;
        merged.skipped += part.skipped;
        for (const FailureRecord& f : part.failures) {
            FailureRecord tagged = f;
            tagged.instance["statement_id"] = part.statement_id;
            merged.failures.push_back(tagged);
        }
    }
    merged.elapsed_ms = ms_since(start);
    return merged;
}

std::vector<VerificationReport> verify_all(const SuiteParams& params) {
    // Path-product chains solve a whole ladder of products per draw; 20 draws
    // match the dedicated statement's default.
    SuiteParams path_params = params;
    path_params.trials = std::min(params.trials, 20);

    std::vector<VerificationReport> reports;
    reports.push_back(verify_product_dim_randomized(params));
    reports.push_back(verify_product_fdim_randomized(params));
    reports.push_back(verify_lower_bound_lemmas_randomized(params));
    reports.push_back(verify_product_distance_randomized(params));
    reports.push_back(verify_product_rsets_randomized(params));
    reports.push_back(verify_fixed_path_products());
    reports.push_back(verify_path_products_randomized(path_params));
    for (int n = 3; n <= 5; ++n) reports.push_back(verify_small_graph_characterizations(n));
    reports.push_back(verify_binomial_trees(5));
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.statement_id < b.statement_id;
              });
    return reports;
}

} // namespace metdim
