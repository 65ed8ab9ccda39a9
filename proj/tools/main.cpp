// metdim command-line front end. Parses arguments, reads edge lists, and
// drives everything through the shared library's C interface. Exit codes:
// 0 success (or verification pass), 1 verification failure, 2 usage or
// input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "metdim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "metdim: " << message << "\n";
    std::exit(kExitUsage);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) die("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream file(*path);
    if (!file) die("cannot write '" + *path + "'");
    file << text;
}

class GraphHandle {
public:
    explicit GraphHandle(metdim_graph* g = nullptr) : graph_(g) {}
    ~GraphHandle() { metdim_graph_free(graph_); }
    GraphHandle(GraphHandle&& other) noexcept : graph_(other.graph_) { other.graph_ = nullptr; }
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;

    metdim_graph* get() const { return graph_; }
    metdim_graph** out() { return &graph_; }

private:
    metdim_graph* graph_;
};

class StringHandle {
public:
    ~StringHandle() { metdim_string_free(text_); }
    char** out() { return &text_; }
    std::string str() const { return text_ ? text_ : ""; }

private:
    char* text_ = nullptr;
};

void check(metdim_status status) {
    if (status != METDIM_OK) die(std::string(metdim_last_error()));
}

GraphHandle load_graph(const std::string& path) {
    GraphHandle graph;
    check(metdim_graph_parse(read_input(path).c_str(), graph.out()));
    return graph;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact metric dimension, rooted and fractional variants, hierarchical "
                 "products, and a verification suite"};
    app.require_subcommand(1);

    std::string file;
    int root = 0;

    auto* dim_cmd = app.add_subcommand("dim", "Metric dimension of a graph");
    dim_cmd->add_option("FILE", file, "edge-list file, or - for stdin")->required();

    auto* fdim_cmd = app.add_subcommand("fdim", "Fractional metric dimension (exact rational)");
    fdim_cmd->add_option("FILE", file, "edge-list file, or - for stdin")->required();

    auto* rdim_cmd = app.add_subcommand("rdim", "Rooted metric dimension");
    rdim_cmd->add_option("FILE", file, "edge-list file, or - for stdin")->required();
    rdim_cmd->add_option("--root", root, "root vertex")->required();

    auto* frdim_cmd = app.add_subcommand("frdim", "Fractional rooted metric dimension");
    frdim_cmd->add_option("FILE", file, "edge-list file, or - for stdin")->required();
    frdim_cmd->add_option("--root", root, "root vertex")->required();

    std::string outer_file, inner_file;
    int outer_root = 0, inner_root = 0;
    std::optional<std::string> output_path;
    auto* product_cmd = app.add_subcommand("product", "Hierarchical product of two rooted graphs");
    product_cmd->add_option("OUTER", outer_file, "outer factor edge list")->required();
    product_cmd->add_option("INNER", inner_file, "inner factor edge list")->required();
    product_cmd->add_option("--root2", outer_root, "outer root")->required();
    product_cmd->add_option("--root1", inner_root, "inner root")->required();
    product_cmd->add_option("-o,--output", output_path, "write the product here instead of stdout");

    std::string family_name;
    std::vector<int> family_args;
    std::optional<int> family_root;
    auto* family_cmd = app.add_subcommand(
        "family", "Emit a named family: path, cycle, complete, biclique, star, binomial");
    family_cmd->add_option("NAME", family_name, "family name")->required();
    family_cmd->add_option("ARGS", family_args, "family size arguments");
    family_cmd->add_option("--root", family_root, "root recorded as a '# root R' comment");

    std::string statement;
    unsigned long long seed = 42;
    int trials = -1, max_inner = -1, max_outer = -1;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Verify a statement: thm2.6, thm3.3, lemmas, paths, smallgraphs, binomial, all");
    verify_cmd->add_option("STATEMENT", statement, "statement to verify")->required();
    verify_cmd->add_option("--seed", seed, "random seed (default 42)");
    verify_cmd->add_option("--trials", trials, "randomized trial count (statement default if omitted)");
    verify_cmd->add_option("--max-inner", max_inner,
                           "largest inner-factor order (binomial: largest tree index)");
    verify_cmd->add_option("--max-outer", max_outer, "largest outer-factor order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (dim_cmd->parsed()) {
        GraphHandle graph = load_graph(file);
        StringHandle json;
        check(metdim_dim(graph.get(), json.out()));
        std::cout << json.str() << "\n";
    } else if (fdim_cmd->parsed()) {
        GraphHandle graph = load_graph(file);
        StringHandle json;
        check(metdim_fdim(graph.get(), json.out()));
        std::cout << json.str() << "\n";
    } else if (rdim_cmd->parsed()) {
        GraphHandle graph = load_graph(file);
        StringHandle json;
        check(metdim_rdim(graph.get(), root, json.out()));
        std::cout << json.str() << "\n";
    } else if (frdim_cmd->parsed()) {
        GraphHandle graph = load_graph(file);
        StringHandle json;
        check(metdim_frdim(graph.get(), root, json.out()));
        std::cout << json.str() << "\n";
    } else if (product_cmd->parsed()) {
        GraphHandle outer = load_graph(outer_file);
        GraphHandle inner = load_graph(inner_file);
        GraphHandle product;
        int product_root = -1;
        check(metdim_graph_product(outer.get(), outer_root, inner.get(), inner_root, product.out(),
                                   &product_root));
        StringHandle text;
        check(metdim_graph_edge_list(product.get(), product_root, text.out()));
        write_output(output_path, text.str());
    } else if (family_cmd->parsed()) {
        GraphHandle graph;
        int canonical_root = -1;
        check(metdim_graph_family(family_name.c_str(), family_args.data(), family_args.size(),
                                  graph.out(), &canonical_root));
        const int emit_root = family_root.value_or(canonical_root);
        StringHandle text;
        check(metdim_graph_edge_list(graph.get(), emit_root, text.out()));
        std::cout << text.str();
    } else if (verify_cmd->parsed()) {
        StringHandle json;
        int passed = 0;
        check(metdim_verify(statement.c_str(), seed, trials, max_inner, max_outer, json.out(),
                            &passed));
        std::cout << json.str() << "\n";
        return passed ? kExitOk : kExitVerificationFailed;
    }
    return kExitOk;
}
