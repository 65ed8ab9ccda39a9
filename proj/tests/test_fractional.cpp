#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lp_brute.hpp"
#include "metdim/enumerate.hpp"
#include "metdim/error.hpp"
#include "metdim/exact.hpp"
#include "metdim/fractional.hpp"
#include "metdim/hproduct.hpp"

using namespace metdim;

namespace {

LpProblem system_as_lp(const PairConstraintSystem& sys) {
    LpProblem lp;
    lp.num_vars = sys.universe;
    lp.objective.assign(sys.universe, Rational(1));
    lp.upper_bounds.assign(sys.universe, Rational(1));
    for (VertexSet w : sys.witnesses) {
        std::vector<Rational> row(sys.universe, Rational(0));
        for (int v : w.to_vector()) row[v] = 1;
        lp.rows.push_back(row);
        lp.rhs.emplace_back(1);
    }
    return lp;
}

} // namespace

TEST_CASE("fractional dimension of basic families") {
    for (int n : {2, 3, 4, 6}) CHECK(fractional_metric_dimension(path(n)).value == 1);
    CHECK(fractional_metric_dimension(complete(2)).value == 1);
    CHECK(fractional_metric_dimension(complete(4)).value == 2);
    CHECK(fractional_metric_dimension(binomial_tree(3).graph).value == 2);
}

TEST_CASE("K_4 relaxation against vertex enumeration") {
    PairConstraintSystem sys = build_full_system(all_pairs_distances(complete(4)));
    auto oracle = testing::brute_force_lp_min(system_as_lp(sys));
    REQUIRE(oracle.has_value());
    CHECK(*oracle == 2);
    CHECK(fractional_metric_dimension(complete(4)).value == *oracle);
}

TEST_CASE("C_6 relaxation against vertex enumeration") {
    // The binding rows are the distance-two pairs; enumeration over the
    // reduced system (validated separately) pins the optimum at 3/2.
    PairConstraintSystem sys = build_full_system(all_pairs_distances(cycle(6)));
    std::vector<VertexSet> reduced;
    for (std::size_t i = 0; i < sys.witnesses.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sys.witnesses.size() && !dominated; ++j)
            if (i != j && sys.witnesses[j].subset_of(sys.witnesses[i]) &&
                (sys.witnesses[j] != sys.witnesses[i] || j < i))
                dominated = true;
        if (!dominated) reduced.push_back(sys.witnesses[i]);
    }
    PairConstraintSystem reduced_sys = sys;
    reduced_sys.witnesses = reduced;
    reduced_sys.pairs.resize(reduced.size());
    auto oracle = testing::brute_force_lp_min(system_as_lp(reduced_sys));
    REQUIRE(oracle.has_value());
    CHECK(*oracle == Rational(3, 2));
    CHECK(fractional_metric_dimension(cycle(6)).value == Rational(3, 2));
}

TEST_CASE("rooted complete graphs") {
    for (int n = 3; n <= 8; ++n) {
        FractionalResult res = fractional_rooted_metric_dimension(RootedGraph(complete(n), 0));
        CHECK(res.value == Rational(n - 1, 2));
        CHECK_FALSE(res.empty_row_convention);
    }
}

TEST_CASE("rooted paths") {
    for (int n : {3, 5, 7}) {
        FractionalResult internal = fractional_rooted_metric_dimension(RootedGraph(path(n), 1));
        CHECK(internal.value == 1);
        CHECK_FALSE(internal.empty_row_convention);

        FractionalResult end = fractional_rooted_metric_dimension(RootedGraph(path(n), 0));
        CHECK(end.value == 0);
        CHECK(end.empty_row_convention);
        CHECK(end.witness.total == 0);
    }
    CHECK(fractional_rooted_metric_dimension(RootedGraph(cycle(4), 0)).value == 1);
}

TEST_CASE("witness function is feasible and matches the reported value") {
    for (const Graph& g : {cycle(5), complete_bipartite(2, 3), star(6),
                           random_connected_graph(9, Rational(1, 2), 61)}) {
        DistanceMatrix dm = all_pairs_distances(g);
        FractionalResult res = fractional_metric_dimension(g);
        CHECK(res.certificate_verified);
        CHECK(res.witness.total == res.value);
        for (const Rational& w : res.witness.weights) {
            CHECK(w >= 0);
            CHECK(w <= 1);
        }
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                Rational mass(0);
                for (int w : resolving_pair_set(dm, u, v).to_vector())
                    mass += res.witness.weights[w];
                CHECK(mass >= 1);
            }
    }
}

TEST_CASE("relaxation bounds") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            const Rational fdim = fractional_metric_dimension(g).value;
            const int dim = metric_dimension(g).value;
            CHECK(fdim >= 1);
            CHECK(fdim <= dim);
            for (int root = 0; root < n; ++root) {
                RootedGraph rg(g, root);
                if (is_end_rooted_path(rg)) continue;
                const Rational frdim = fractional_rooted_metric_dimension(rg).value;
                CHECK(frdim <= rooted_metric_dimension(rg).value);
                CHECK(frdim <= Rational(n - 1, 2));
                CHECK(fdim - 1 <= frdim);
                CHECK(frdim <= fdim);
            }
        }
    }
}

TEST_CASE("the matrix formulation and the weight-function reading agree") {
    // Candidates exclude the root, but the root lies in no equidistant-pair
    // witness set, so letting it carry weight cannot help. Solving with the
    // root as one more column must not change the optimum.
    for (const Graph& g : {cycle(5), complete(4), complete_bipartite(2, 3),
                           random_connected_graph(7, Rational(1, 2), 71)}) {
        DistanceMatrix dm = all_pairs_distances(g);
        for (int root = 0; root < g.order(); root += 2) {
            PairConstraintSystem sys = build_rooted_system(RootedGraph(g, root), dm);
            for (VertexSet w : sys.witnesses) CHECK_FALSE(w.contains(root));
            PairConstraintSystem widened = sys;
            widened.candidates = VertexSet::all(g.order());
            CHECK(fractional_dimension(sys).value == fractional_dimension(widened).value);
        }
    }
}

TEST_CASE("duals certify every solve") {
    LpCertificateStats before = lp_certificate_stats();
    fractional_metric_dimension(cycle(7));
    fractional_rooted_metric_dimension(RootedGraph(complete(6), 2));
    LpCertificateStats after = lp_certificate_stats();
    CHECK(after.solves >= before.solves + 2);
    CHECK(after.certificates_verified == after.solves);
}

TEST_CASE("infeasible systems are rejected") {
    PairConstraintSystem bad;
    bad.universe = 3;
    bad.candidates = VertexSet::all(3);
    bad.pairs = {{0, 1}};
    bad.witnesses = {VertexSet{}};
    bad.infeasible = true;
    CHECK_THROWS_AS(fractional_dimension(bad), Error);
}
