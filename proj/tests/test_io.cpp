#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "eist/io.hpp"
#include "eist/pipeline.hpp"

using namespace eist;

TEST_CASE("edge list parse / serialize round trip") {
    std::istringstream in("3 4 1\n0 1\n1 2\n1 2\n0 0\n");
    edge_list_file f = parse_edge_list(in);
    CHECK(f.root == 1);
    CHECK(f.graph.vertex_count() == 3);
    CHECK(f.graph.edge_count() == 4);
    CHECK(f.graph.is_loop(3));

    std::ostringstream out;
    write_edge_list(out, f.graph, f.root);
    std::istringstream again(out.str());
    edge_list_file f2 = parse_edge_list(again);
    CHECK(f2.graph == f.graph);
    CHECK(f2.root == f.root);
}

TEST_CASE("edge list rejects malformed input with line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_edge_list(in);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("nonsense\n", 1);
    expect_line("2 1\n0 1\n", 1);             // short header
    expect_line("2 2 0\n0 1\n", 2);           // missing edge line
    expect_line("2 1 0\n0 5\n", 2);           // endpoint out of range
    expect_line("2 1 7\n0 1\n", 1);           // root out of range
    expect_line("2 1 0\n0 1\n0 1\n", 3);      // trailing content
    expect_line("2 1 0\n0 1 junk\n", 2);      // extra tokens
}

TEST_CASE("sequence serialization round trips") {
    auto [g, seq] = random_4ec(9, 12);
    std::ostringstream out;
    write_sequence(out, seq);
    std::istringstream in(out.str());
    mader_sequence back = parse_sequence(in);
    CHECK(replay(back) == g);
    std::ostringstream out2;
    write_sequence(out2, back);
    CHECK(out.str() == out2.str());
}

TEST_CASE("decomposition dump format") {
    auto [g, seq] = base_graph();
    chain_decomposition d = base_decomposition(seq.root, seq.partner, seq.base_edges);
    std::ostringstream out;
    write_decomposition(out, d);
    CHECK(out.str() == "0 up edges=0,1 closed 0\n1 down edges=2,3 closed 0\n");

    d.chains.insert(d.chains.begin(), make_one_way(9, 0, 1));
    std::ostringstream out2;
    write_decomposition(out2, d);
    CHECK(out2.str().substr(0, 22) == "0 oneway edges=9 arc 0");
}

TEST_CASE("tree file round trips through write and parse") {
    auto [g, seq] = random_4ec(33, 20);
    pipeline_result r = run_pipeline(g, 0);
    std::ostringstream out;
    write_trees(out, r.trees);
    std::istringstream in(out.str());
    tree_set back = parse_trees(in);
    for (int k = 0; k < 4; ++k) CHECK(back.parent[k] == r.trees.parent[k]);
    CHECK(verify_independence(r.stripped, 0, back).ok());
}

TEST_CASE("numbering dump uses exact fractions") {
    auto [g, seq] = base_graph();
    pipeline_result r = run_pipeline(g, 0);
    std::ostringstream out;
    write_numbering(out, r.forward, "f");
    CHECK(out.str() == "edge 0 f=0/1\nedge 1 f=1/1\n");
}

TEST_CASE("dot export marks trees and one-way arcs") {
    auto [g, seq] = random_4ec(14, 8);
    pipeline_result r = run_pipeline(g, 0);
    std::ostringstream out;
    write_dot(out, r.stripped, 0, r.stripped_decomposition, r.trees);
    std::string dot = out.str();
    CHECK(dot.rfind("graph eist {", 0) == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("red") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.back() == '\n');
}
