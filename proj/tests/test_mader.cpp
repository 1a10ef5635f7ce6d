#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "eist/connectivity.hpp"
#include "eist/io.hpp"
#include "eist/mader.hpp"
#include "oracles.hpp"

using namespace eist;

TEST_CASE("base graph: two vertices joined by four parallel edges") {
    auto [g, seq] = base_graph();
    CHECK(g.vertices() == std::vector<int>{0, 1});
    CHECK(g.edge_ids() == std::vector<int>{0, 1, 2, 3});
    for (int e : g.edge_ids()) CHECK(g.ends(e) == std::pair{0, 1});
    CHECK(edge_connectivity(g).value == 4);
    CHECK(replay(seq) == g);
}

TEST_CASE("pinching two parallel base edges") {
    auto [g, seq] = base_graph();
    pinch_op op{0, 1, 2, 4, 5, 6, 7};
    apply_op(g, op);
    CHECK(g.vertex_count() == 3);
    CHECK(g.degree(2) == 4);
    CHECK(!g.has_edge(0));
    CHECK(!g.has_edge(1));
    int to0 = 0, to1 = 0;
    for (int e : g.incident_edges(2)) (g.other_end(e, 2) == 0 ? to0 : to1) += 1;
    CHECK(to0 == 2); // parallel edges to each repeated endpoint
    CHECK(to1 == 2);
    CHECK(is_4_edge_connected(g));

    add_edge_op loop{0, 0, 8};
    apply_op(g, loop);
    CHECK(g.is_loop(8));

    pinch_op bad{2, 2, 9, 10, 11, 12, 13};
    CHECK_THROWS_AS(apply_op(g, bad), std::invalid_argument);
}

TEST_CASE("find_deletable_edge") {
    SECTION("base graph is minimally 4-edge-connected") {
        auto [g, seq] = base_graph();
        CHECK(!find_deletable_edge(g).has_value());
    }
    SECTION("a fifth parallel edge is deletable") {
        auto [g, seq] = base_graph();
        g.add_edge(0, 1);
        auto e = find_deletable_edge(g);
        REQUIRE(e.has_value());
        multigraph h = g;
        h.delete_edge(*e);
        CHECK(is_4_edge_connected(h));
    }
    SECTION("loops are always deletable") {
        auto [g, seq] = base_graph();
        int loop = g.add_edge(1, 1);
        auto e = find_deletable_edge(g);
        REQUIRE(e.has_value());
        CHECK(*e == loop);
    }
}

TEST_CASE("split_off undoes a pinch") {
    auto [g, seq] = base_graph();
    multigraph pinched = g;
    apply_op(pinched, mader_op{pinch_op{0, 1, 2, 4, 5, 6, 7}});

    auto [op, recovered] = split_off(pinched, 2, 0);
    CHECK(is_4_edge_connected(recovered));
    CHECK(recovered.vertex_count() == 2);
    CHECK(recovered.edge_count() == 4);
    // endpoints all {0,1} again
    for (int e : recovered.edge_ids()) CHECK(recovered.ends(e) == std::pair{0, 1});
    // forward application of the recorded pinch recreates the pinched graph
    multigraph fwd = recovered;
    apply_op(fwd, mader_op{op});
    CHECK(fwd == pinched);

    CHECK_THROWS_AS(split_off(pinched, 0, 0), std::invalid_argument);
}

TEST_CASE("extract_sequence on hand-built graphs") {
    SECTION("base graph extracts to an empty op list") {
        auto [g, seq] = base_graph();
        auto ext = extract_sequence(g, 0);
        CHECK(ext.ops.empty());
        CHECK(ext.root == 0);
        CHECK(ext.partner == 1);
    }
    SECTION("one extra edge extracts to exactly one add") {
        auto [g, seq] = base_graph();
        g.add_edge(0, 1);
        auto ext = extract_sequence(g, 0);
        REQUIRE(ext.ops.size() == 1);
        CHECK(std::holds_alternative<add_edge_op>(ext.ops[0]));
        CHECK(replay(ext) == g);
    }
    SECTION("complete graph on five vertices") {
        multigraph g;
        for (int i = 0; i < 5; ++i) g.add_vertex();
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) g.add_edge(i, j);
        auto ext = extract_sequence(g, 0);
        CHECK(replay(ext) == g);
    }
    SECTION("rejects thin graphs with a verified witness") {
        multigraph g;
        for (int i = 0; i < 3; ++i) g.add_vertex();
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        try {
            extract_sequence(g, 0);
            FAIL("expected not_four_edge_connected");
        } catch (const not_four_edge_connected& e) {
            CHECK(e.witness_cut.size() < 4);
            CHECK(oracle::disconnects(g, {e.witness_cut.begin(), e.witness_cut.end()}));
        }
    }
}

TEST_CASE("random_4ec basics") {
    SECTION("zero ops is the base graph") {
        auto [g, seq] = random_4ec(123, 0);
        auto [base, bseq] = base_graph();
        CHECK(g == base);
    }
    SECTION("deterministic in the seed") {
        auto [g1, s1] = random_4ec(42, 25);
        auto [g2, s2] = random_4ec(42, 25);
        CHECK(g1 == g2);
        std::ostringstream a, b;
        write_sequence(a, s1);
        write_sequence(b, s2);
        CHECK(a.str() == b.str());
    }
    SECTION("always 4-edge-connected") {
        for (int seed = 1; seed <= 10; ++seed) {
            auto [g, seq] = random_4ec(seed, 3 + seed);
            CHECK(is_4_edge_connected(g));
        }
    }
}

TEST_CASE("extract and replay round-trip exactly") {
    for (int seed = 1; seed <= 25; ++seed) {
        auto [g, seq] = random_4ec(seed, seed % 17);
        auto ext = extract_sequence(g, 0);
        CHECK(replay(ext) == g);
        // each reverse step strictly shrinks |E| + |V|
        CHECK(static_cast<int>(ext.ops.size()) <= g.edge_count() + g.vertex_count() - 6);
    }
}

TEST_CASE("extraction is canonical: golden sequence for the pinched base") {
    auto [g, seq] = base_graph();
    apply_op(g, mader_op{pinch_op{0, 1, 2, 4, 5, 6, 7}});
    auto ext = extract_sequence(g, 0);
    std::ostringstream out;
    write_sequence(out, ext);
    // vertex 1 is the smallest degree-4 vertex, and the second pairing is
    // the first whose sutures keep the graph 4-edge-connected
    CHECK(out.str() == "base 0 2 4 6 8 9\npinch 8 9 -> 1 2 5 3 7\n");
    CHECK(replay(ext) == g);

    auto ext2 = extract_sequence(g, 0);
    std::ostringstream out2;
    write_sequence(out2, ext2);
    CHECK(out.str() == out2.str());
}
