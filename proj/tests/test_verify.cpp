#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "metdim/error.hpp"
#include "metdim/exact.hpp"
#include "metdim/fractional.hpp"
#include "metdim/verify.hpp"

using namespace metdim;

namespace {

RootedGraph k2_rooted() { return RootedGraph(complete(2), 0); }

nlohmann::ordered_json strip_elapsed(nlohmann::ordered_json j) {
    if (j.contains("elapsed_ms")) j["elapsed_ms"] = 0;
    return j;
}

} // namespace

TEST_CASE("product dimension identity on fixed instances") {
    // Inner factor T_2: both sides equal 2, the dimension of T_3.
    VerificationReport a = verify_product_dim(k2_rooted(), binomial_tree(2));
    CHECK(a.passed());
    CHECK(a.instances_checked == 1);

    VerificationReport b = verify_product_dim(RootedGraph(complete(3), 0), RootedGraph(cycle(4), 0));
    CHECK(b.passed());

    CHECK_THROWS_AS(verify_product_dim(k2_rooted(), RootedGraph(path(4), 0)), Error);
    try {
        verify_product_dim(k2_rooted(), RootedGraph(path(4), 3));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisViolated);
    }
}

TEST_CASE("fractional product identity on fixed instances") {
    VerificationReport a = verify_product_fdim(k2_rooted(), binomial_tree(2));
    CHECK(a.passed());

    // dim_f(K_2 x K_4 product) = 2 * rdim_f(K_4) = 3.
    VerificationReport b = verify_product_fdim(k2_rooted(), RootedGraph(complete(4), 0));
    CHECK(b.passed());
    ProductGraph p = hierarchical_product(k2_rooted(), RootedGraph(complete(4), 0));
    CHECK(fractional_metric_dimension(p.result.graph).value == 3);

    VerificationReport c = verify_product_fdim(RootedGraph(complete(3), 0), RootedGraph(complete(3), 0));
    CHECK(c.passed());

    CHECK_THROWS_AS(verify_product_fdim(k2_rooted(), k2_rooted()), Error);
}

TEST_CASE("the gate-free checker exposes the degenerate case") {
    // K_2 x end-rooted P_2 is the four-vertex path: dimension 1, while the
    // factor side is 2 * rdim = 0. The raw identity check must report it.
    auto failure = check_product_dim_identity(k2_rooted(), RootedGraph(path(2), 0));
    REQUIRE(failure.has_value());
    CHECK(failure->expected == "dim(product) = 0");
    CHECK(failure->actual == "dim(product) = 1");

    // The failure descriptor replays: rebuilding the instance from its
    // serialization reproduces the identical record.
    const nlohmann::ordered_json& inst = failure->instance;
    std::vector<Edge> outer_edges, inner_edges;
    for (const auto& e : inst["outer"]["edges"]) outer_edges.emplace_back(e[0], e[1]);
    for (const auto& e : inst["inner"]["edges"]) inner_edges.emplace_back(e[0], e[1]);
    RootedGraph outer(build_graph(inst["outer"]["order"], outer_edges), inst["outer"]["root"]);
    RootedGraph inner(build_graph(inst["inner"]["order"], inner_edges), inst["inner"]["root"]);
    auto replay = check_product_dim_identity(outer, inner);
    REQUIRE(replay.has_value());
    CHECK(replay->expected == failure->expected);
    CHECK(replay->actual == failure->actual);
    CHECK(replay->instance == failure->instance);
}

TEST_CASE("a corrupted equality yields a replayable failing report") {
    VerificationReport report;
    report.statement_id = "Thm-2.6";
    if (auto failure = check_product_dim_identity(k2_rooted(), RootedGraph(path(2), 0)))
        report.failures.push_back(*failure);
    report.instances_checked = 1;
    CHECK_FALSE(report.passed());
    CHECK(report.failures.size() == 1);
    nlohmann::ordered_json j = report.to_json();
    CHECK(j["failures"].size() == 1);
    CHECK(j["failures"][0].contains("instance"));
    CHECK(j["failures"][0].contains("expected"));
    CHECK(j["failures"][0].contains("actual"));
}

TEST_CASE("lower bound lemmas on fixed instances") {
    // Inner K_2 is an end-rooted path: the integer bound degenerates to 0 and
    // the fractional side is skipped.
    VerificationReport a = verify_lower_bound_lemmas(k2_rooted(), k2_rooted());
    CHECK(a.passed());
    CHECK(a.skipped == 1);
    CHECK(rooted_metric_dimension(hierarchical_product(k2_rooted(), k2_rooted()).result).value == 1);

    VerificationReport b = verify_lower_bound_lemmas(k2_rooted(), RootedGraph(complete(3), 0));
    CHECK(b.passed());
    CHECK(b.skipped == 0);

    VerificationReport c = verify_lower_bound_lemmas(k2_rooted(), RootedGraph(cycle(4), 0));
    CHECK(c.passed());
}

TEST_CASE("path products on fixed instances") {
    // dim(K_4 x P_n) = 3 and dim_f = 2 throughout the ladder.
    RootedGraph k4(complete(4), 0);
    CHECK(verify_path_product(k4, 4).passed());
    for (int n = 2; n <= 4; ++n) {
        ProductGraph p = hierarchical_product(k4, RootedGraph(path(n), 0));
        CHECK(metric_dimension(p.result.graph).value == 3);
        CHECK(fractional_metric_dimension(p.result.graph).value == 2);
    }

    // Internally rooted P_3 and the 5-cycle both give dimension 2.
    RootedGraph p3(path(3), 1);
    CHECK(verify_path_product(p3, 3).passed());
    for (int n = 2; n <= 3; ++n) {
        ProductGraph p = hierarchical_product(p3, RootedGraph(path(n), 0));
        CHECK(metric_dimension(p.result.graph).value == 2);
    }
    RootedGraph c5(cycle(5), 0);
    CHECK(verify_path_product(c5, 3).passed());
    for (int n = 2; n <= 3; ++n) {
        ProductGraph p = hierarchical_product(c5, RootedGraph(path(n), 0));
        CHECK(metric_dimension(p.result.graph).value == 2);
    }

    CHECK_THROWS_AS(verify_path_product(RootedGraph(complete(9), 0), 8), Error);
}

TEST_CASE("small graph characterizations") {
    for (int n = 2; n <= 4; ++n) {
        VerificationReport report = verify_small_graph_characterizations(n);
        CHECK(report.passed());
        CHECK(report.instances_checked == (n == 2 ? 1 : n == 3 ? 2 : 6));
    }
    CHECK(metric_dimension(star(4)).value == 2); // K_{1,3}: dim = n-2
    CHECK_THROWS_AS(verify_small_graph_characterizations(6), Error);
}

TEST_CASE("binomial tree corollaries") {
    VerificationReport report = verify_binomial_trees(3);
    CHECK(report.passed());
    CHECK(report.instances_checked == 2);
    CHECK(metric_dimension(binomial_tree(2).graph).value == 1);
    CHECK(fractional_metric_dimension(binomial_tree(2).graph).value == 1);
    CHECK(metric_dimension(binomial_tree(3).graph).value == 2);
    CHECK(fractional_metric_dimension(binomial_tree(3).graph).value == 2);
    CHECK_THROWS_AS(verify_binomial_trees(1), Error);
    CHECK_THROWS_AS(verify_binomial_trees(6), Error);
}

TEST_CASE("randomized drivers are deterministic and currently all pass") {
    SuiteParams params{7, 5, 5, 3};
    VerificationReport first = verify_randomized_suite(params);
    CHECK(first.passed());
    CHECK(first.instances_checked == 43); // pinned by the first run
    CHECK(first.skipped == 6);

    VerificationReport second = verify_randomized_suite(params);
    CHECK(strip_elapsed(first.to_json()) == strip_elapsed(second.to_json()));

    SuiteParams zero{7, 0, 5, 3};
    VerificationReport empty = verify_randomized_suite(zero);
    CHECK(empty.passed());
    CHECK(empty.instances_checked == 0);
}

TEST_CASE("verify_all is sorted and carries the expected statements") {
    SuiteParams params{11, 2, 4, 3};
    std::vector<VerificationReport> reports = verify_all(params);
    std::vector<std::string> ids;
    for (const auto& r : reports) ids.push_back(r.statement_id);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    for (const char* expected :
         {"Binomial-trees", "Characterizations-n3", "Characterizations-n4", "Characterizations-n5",
          "Eq-1", "Lemma-2.5", "Lower-bound-lemmas", "Path-products-fixed", "Path-products-random",
          "Thm-2.6", "Thm-3.3"})
        CHECK(std::find(ids.begin(), ids.end(), expected) != ids.end());
    for (const auto& r : reports) CHECK(r.passed());
}

TEST_CASE("report serialization shape") {
    VerificationReport report = verify_binomial_trees(2);
    nlohmann::ordered_json j = report.to_json();
    CHECK(j["statement_id"] == "Binomial-trees");
    CHECK(j["instances_checked"] == 1);
    CHECK(j["skipped"] == 0);
    CHECK(j["failures"].is_array());
    CHECK(j["elapsed_ms"].is_number());
}
