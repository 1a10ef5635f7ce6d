// Command-line front end: connectivity checking, tree construction,
// instance generation, and black-box certificate verification.
//
// Exit codes: 0 success, 1 the checked property fails (not 4-edge-connected
// / certificate rejected), 2 input error, 3 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eist/connectivity.hpp"
#include "eist/io.hpp"
#include "eist/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

eist::edge_list_file load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw eist::parse_error(0, "cannot open " + path);
    return eist::parse_edge_list(in);
}

void print_cut(std::ostream& os, const std::vector<int>& cut) {
    os << "cut:";
    for (int e : cut) os << ' ' << e;
    os << '\n';
}

int cmd_check(const std::string& path, bool quiet) {
    auto file = load_graph(path);
    eist::cut_report rep = eist::edge_connectivity(file.graph);
    if (!quiet) {
        std::cout << "lambda=" << rep.value << '\n';
        if (rep.value < 4) print_cut(std::cout, rep.cut_edges);
    }
    return rep.value >= 4 ? kExitOk : kExitPropertyFails;
}

int cmd_trees(const std::string& path, bool quiet, bool emit_chains, bool emit_numbering,
              const std::string& dot_path) {
    auto file = load_graph(path);
    try {
        eist::pipeline_result r = eist::run_pipeline(file.graph, file.root);
        std::ostringstream out;
        eist::write_trees(out, r.trees);
        if (emit_chains) eist::write_decomposition(out, r.stripped_decomposition);
        if (emit_numbering) {
            eist::write_numbering(out, r.forward, "f");
            eist::write_numbering(out, r.reverse, "g");
        }
        if (!dot_path.empty()) {
            std::ofstream dot(dot_path);
            if (!dot) {
                std::cerr << "cannot write " << dot_path << '\n';
                return kExitInputError;
            }
            eist::write_dot(dot, r.stripped, file.root, r.stripped_decomposition, r.trees);
        }
        if (!r.report.ok()) {
            if (!quiet)
                for (const auto& v : r.report.violations)
                    std::cerr << "violation at vertex " << v.vertex << ": " << v.detail << '\n';
            return kExitPropertyFails;
        }
        std::cout << out.str();
        return kExitOk;
    } catch (const eist::not_four_edge_connected& e) {
        if (!quiet) {
            std::cerr << e.what() << '\n';
            print_cut(std::cerr, e.witness_cut);
        }
        return kExitPropertyFails;
    }
}

int cmd_generate(std::uint64_t seed, int n_ops, double pinch_bias, const std::string& out_path) {
    auto [g, seq] = eist::random_4ec(seed, n_ops, pinch_bias);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << '\n';
        return kExitInputError;
    }
    eist::write_edge_list(out, g, seq.root);
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& trees_path, bool quiet) {
    auto file = load_graph(graph_path);
    std::ifstream tin(trees_path);
    if (!tin) throw eist::parse_error(0, "cannot open " + trees_path);
    eist::tree_set trees = eist::parse_trees(tin);
    for (int k = 0; k < 4; ++k)
        for (const auto& [v, e] : trees.parent[k])
            if (!file.graph.has_edge(e)) throw eist::parse_error(0, "tree references unknown edge " + std::to_string(e));
    eist::independence_report rep = eist::verify_independence(file.graph, file.root, trees);
    if (!rep.ok() && !quiet)
        for (const auto& v : rep.violations)
            std::cerr << "violation: vertex " << v.vertex << " trees " << v.tree_a + 1 << '/' << v.tree_b + 1 << ": "
                      << v.detail << '\n';
    return rep.ok() ? kExitOk : kExitPropertyFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"four edge-independent spanning trees of 4-edge-connected multigraphs"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --quiet after the subcommand name
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress reports on stderr/stdout");

    std::string path, trees_path, dot_path, out_path;
    bool emit_chains = false, emit_numbering = false;

    std::uint64_t seed = 1;
    if (const char* env = std::getenv("EIST_SEED")) seed = std::strtoull(env, nullptr, 10);
    int n_ops = 30;
    double pinch_bias = 0.7;

    auto* check = app.add_subcommand("check", "report edge connectivity; exit 0 iff 4-edge-connected");
    check->add_option("graph", path, "edge list file")->required();

    auto* trees = app.add_subcommand("trees", "construct and verify four edge-independent spanning trees");
    trees->add_option("graph", path, "edge list file")->required();
    trees->add_flag("--emit-chains", emit_chains, "also print the chain decomposition");
    trees->add_flag("--emit-numbering", emit_numbering, "also print both edge numberings");
    trees->add_option("--dot", dot_path, "write a DOT rendering with tree-colored edges");

    auto* gen = app.add_subcommand("generate", "write a random 4-edge-connected instance");
    gen->add_option("out", out_path, "output edge list file")->required();
    gen->add_option("--seed", seed, "generator seed (default from EIST_SEED)");
    gen->add_option("--ops", n_ops, "number of construction ops");
    gen->add_option("--pinch-bias", pinch_bias, "probability that an op is a pinch");

    auto* verify = app.add_subcommand("verify", "check a tree certificate against a graph");
    verify->add_option("graph", path, "edge list file")->required();
    verify->add_option("trees", trees_path, "tree certificate file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check)) return cmd_check(path, quiet);
        if (app.got_subcommand(trees)) return cmd_trees(path, quiet, emit_chains, emit_numbering, dot_path);
        if (app.got_subcommand(gen)) return cmd_generate(seed, n_ops, pinch_bias, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(path, trees_path, quiet);
    } catch (const eist::parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const eist::internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return kExitInternalError;
    }
    return kExitInputError;
}
