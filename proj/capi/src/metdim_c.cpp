#include "metdim.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "metdim/error.hpp"
#include "metdim/exact.hpp"
#include "metdim/fractional.hpp"
#include "metdim/graph.hpp"
#include "metdim/hproduct.hpp"
#include "metdim/verify.hpp"

struct metdim_graph {
    metdim::Graph graph;
};

namespace {

thread_local std::string g_last_error;

using nlohmann::ordered_json;

metdim_status map_code(metdim::ErrorCode code) {
    using metdim::ErrorCode;
    switch (code) {
        case ErrorCode::SelfLoop: return METDIM_ERR_SELF_LOOP;
        case ErrorCode::DuplicateEdge: return METDIM_ERR_DUPLICATE_EDGE;
        case ErrorCode::Disconnected: return METDIM_ERR_DISCONNECTED;
        case ErrorCode::TrivialGraph: return METDIM_ERR_TRIVIAL_GRAPH;
        case ErrorCode::SizeOutOfRange: return METDIM_ERR_SIZE_OUT_OF_RANGE;
        case ErrorCode::OrderOverflow: return METDIM_ERR_ORDER_OVERFLOW;
        case ErrorCode::EqualVertices: return METDIM_ERR_INVALID_ARGUMENT;
        case ErrorCode::IndexOutOfRange: return METDIM_ERR_INVALID_ARGUMENT;
        case ErrorCode::RootOutOfRange: return METDIM_ERR_ROOT_OUT_OF_RANGE;
        case ErrorCode::Infeasible: return METDIM_ERR_INFEASIBLE;
        case ErrorCode::Unbounded: return METDIM_ERR_UNBOUNDED;
        case ErrorCode::HypothesisViolated: return METDIM_ERR_HYPOTHESIS_VIOLATED;
        case ErrorCode::ParseError: return METDIM_ERR_PARSE;
        case ErrorCode::UnknownFamily: return METDIM_ERR_UNKNOWN_FAMILY;
        case ErrorCode::Internal: return METDIM_ERR_INTERNAL;
    }
    return METDIM_ERR_INTERNAL;
}

template <class F>
metdim_status guarded(F&& body) {
    try {
        body();
        return METDIM_OK;
    } catch (const metdim::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return METDIM_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

metdim_status require(bool ok, const char* message) {
    if (ok) return METDIM_OK;
    g_last_error = message;
    return METDIM_ERR_INVALID_ARGUMENT;
}

int default_or(int value, int fallback) { return value > 0 ? value : fallback; }

} // namespace

extern "C" {

const char* metdim_status_name(metdim_status status) {
    switch (status) {
        case METDIM_OK: return "ok";
        case METDIM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case METDIM_ERR_PARSE: return "parse error";
        case METDIM_ERR_SELF_LOOP: return "self loop";
        case METDIM_ERR_DUPLICATE_EDGE: return "duplicate edge";
        case METDIM_ERR_DISCONNECTED: return "disconnected";
        case METDIM_ERR_TRIVIAL_GRAPH: return "trivial graph";
        case METDIM_ERR_SIZE_OUT_OF_RANGE: return "size out of range";
        case METDIM_ERR_ORDER_OVERFLOW: return "order overflow";
        case METDIM_ERR_ROOT_OUT_OF_RANGE: return "root out of range";
        case METDIM_ERR_HYPOTHESIS_VIOLATED: return "hypothesis violated";
        case METDIM_ERR_UNKNOWN_FAMILY: return "unknown family";
        case METDIM_ERR_INFEASIBLE: return "infeasible";
        case METDIM_ERR_UNBOUNDED: return "unbounded";
        case METDIM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* metdim_last_error(void) { return g_last_error.c_str(); }

metdim_status metdim_graph_parse(const char* edge_list_text, metdim_graph** out_graph) {
    if (auto bad = require(edge_list_text && out_graph, "null argument")) return bad;
    return guarded([&] { *out_graph = new metdim_graph{metdim::parse_edge_list(edge_list_text)}; });
}

metdim_status metdim_graph_family(const char* name, const int* args, size_t num_args,
                                  metdim_graph** out_graph, int* out_root) {
    if (auto bad = require(name && out_graph && (args || num_args == 0), "null argument")) return bad;
    return guarded([&] {
        const std::string family(name);
        auto arg = [&](size_t i) {
            if (i >= num_args)
                throw metdim::Error(metdim::ErrorCode::SizeOutOfRange,
                                    "family '" + family + "' needs more arguments");
            return args[i];
        };
        auto expect_args = [&](size_t n) {
            if (num_args != n)
                throw metdim::Error(metdim::ErrorCode::SizeOutOfRange,
                                    "family '" + family + "' takes " + std::to_string(n) +
                                        " argument(s), got " + std::to_string(num_args));
        };
        int root = -1;
        std::optional<metdim::Graph> built;
        if (family == "path") {
            expect_args(1);
            built.emplace(metdim::path(arg(0)));
        } else if (family == "cycle") {
            expect_args(1);
            built.emplace(metdim::cycle(arg(0)));
        } else if (family == "complete") {
            expect_args(1);
            built.emplace(metdim::complete(arg(0)));
        } else if (family == "biclique") {
            expect_args(2);
            built.emplace(metdim::complete_bipartite(arg(0), arg(1)));
        } else if (family == "star") {
            expect_args(1);
            built.emplace(metdim::star(arg(0)));
        } else if (family == "binomial") {
            expect_args(1);
            metdim::RootedGraph tree = metdim::binomial_tree(arg(0));
            built.emplace(std::move(tree.graph));
            root = tree.root;
        } else {
            throw metdim::Error(metdim::ErrorCode::UnknownFamily, "no family named '" + family + "'");
        }
        *out_graph = new metdim_graph{std::move(*built)};
        if (out_root) *out_root = root;
    });
}

metdim_status metdim_graph_product(const metdim_graph* outer, int outer_root,
                                   const metdim_graph* inner, int inner_root,
                                   metdim_graph** out_graph, int* out_root) {
    if (auto bad = require(outer && inner && out_graph, "null argument")) return bad;
    return guarded([&] {
        metdim::ProductGraph p = metdim::hierarchical_product(
            metdim::RootedGraph(outer->graph, outer_root), metdim::RootedGraph(inner->graph, inner_root));
        *out_graph = new metdim_graph{std::move(p.result.graph)};
        if (out_root) *out_root = p.result.root;
    });
}

int metdim_graph_order(const metdim_graph* graph) { return graph ? graph->graph.order() : 0; }

metdim_status metdim_graph_edge_list(const metdim_graph* graph, int root_or_negative, char** out_text) {
    if (auto bad = require(graph && out_text, "null argument")) return bad;
    return guarded([&] {
        std::optional<int> root;
        if (root_or_negative >= 0) {
            if (root_or_negative >= graph->graph.order())
                throw metdim::Error(metdim::ErrorCode::RootOutOfRange,
                                    "root " + std::to_string(root_or_negative) + " outside 0.." +
                                        std::to_string(graph->graph.order() - 1));
            root = root_or_negative;
        }
        *out_text = copy_string(metdim::to_edge_list(graph->graph, root));
    });
}

void metdim_graph_free(metdim_graph* graph) { delete graph; }

metdim_status metdim_dim(const metdim_graph* graph, char** out_json) {
    if (auto bad = require(graph && out_json, "null argument")) return bad;
    return guarded([&] {
        metdim::DimensionResult res = metdim::metric_dimension(graph->graph);
        ordered_json j{{"dim", res.value}, {"basis", res.basis.to_vector()}};
        *out_json = copy_string(j.dump());
    });
}

metdim_status metdim_fdim(const metdim_graph* graph, char** out_json) {
    if (auto bad = require(graph && out_json, "null argument")) return bad;
    return guarded([&] {
        metdim::FractionalResult res = metdim::fractional_metric_dimension(graph->graph);
        ordered_json weights = ordered_json::object();
        for (std::size_t v = 0; v < res.witness.weights.size(); ++v)
            weights[std::to_string(v)] = metdim::rational_to_string(res.witness.weights[v]);
        ordered_json j{{"dim_f", metdim::rational_to_string(res.value)}, {"weights", weights}};
        *out_json = copy_string(j.dump());
    });
}

metdim_status metdim_rdim(const metdim_graph* graph, int root, char** out_json) {
    if (auto bad = require(graph && out_json, "null argument")) return bad;
    return guarded([&] {
        metdim::DimensionResult res =
            metdim::rooted_metric_dimension(metdim::RootedGraph(graph->graph, root));
        ordered_json j{{"rdim", res.value}, {"basis", res.basis.to_vector()}};
        *out_json = copy_string(j.dump());
    });
}

metdim_status metdim_frdim(const metdim_graph* graph, int root, char** out_json) {
    if (auto bad = require(graph && out_json, "null argument")) return bad;
    return guarded([&] {
        metdim::FractionalResult res =
            metdim::fractional_rooted_metric_dimension(metdim::RootedGraph(graph->graph, root));
        ordered_json j{{"rdim_f", metdim::rational_to_string(res.value)},
                       {"convention_empty_Pu", res.empty_row_convention}};
        *out_json = copy_string(j.dump());
    });
}

metdim_status metdim_verify(const char* statement, unsigned long long seed, int trials,
                            int max_inner, int max_outer, char** out_json, int* out_passed) {
    if (auto bad = require(statement && out_json, "null argument")) return bad;
    return guarded([&] {
        const std::string which(statement);
        metdim::SuiteParams params;
        params.seed = seed;
        params.max_inner = default_or(max_inner, 6);
        params.max_outer = default_or(max_outer, 4);

        std::vector<metdim::VerificationReport> reports;
        if (which == "thm2.6") {
            params.trials = default_or(trials, 100);
            reports.push_back(metdim::verify_product_dim_randomized(params));
        } else if (which == "thm3.3") {
            params.trials = default_or(trials, 50);
            reports.push_back(metdim::verify_product_fdim_randomized(params));
        } else if (which == "lemmas") {
            params.trials = default_or(trials, 50);
            reports.push_back(metdim::verify_lower_bound_lemmas_randomized(params));
        } else if (which == "paths") {
            params.trials = default_or(trials, 20);
            reports.push_back(metdim::verify_fixed_path_products());
            reports.push_back(metdim::verify_path_products_randomized(params));
        } else if (which == "smallgraphs") {
            for (int n = 3; n <= 5; ++n)
                reports.push_back(metdim::verify_small_graph_characterizations(n));
        } else if (which == "binomial") {
            int n_max = max_inner > 0 ? std::min(std::max(max_inner, 2), 5) : 5;
            reports.push_back(metdim::verify_binomial_trees(n_max));
        } else if (which == "all") {
            params.trials = default_or(trials, 50);
            reports = metdim::verify_all(params);
        } else {
            throw metdim::Error(metdim::ErrorCode::UnknownFamily,
                                "no verification statement named '" + which + "'");
        }

        bool passed = true;
        ordered_json report_list = ordered_json::array();
        for (const metdim::VerificationReport& report : reports) {
            passed = passed && report.passed();
            report_list.push_back(report.to_json());
        }
        ordered_json j{{"passed", passed}, {"reports", report_list}};
        *out_json = copy_string(j.dump(2));
        if (out_passed) *out_passed = passed ? 1 : 0;
    });
}

void metdim_string_free(char* text) { std::free(text); }

} // extern "C"
