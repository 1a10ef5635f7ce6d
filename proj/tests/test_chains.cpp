#include <catch2/catch_amalgamated.hpp>

#include "eist/chains.hpp"
#include "eist/mader.hpp"

using namespace eist;

namespace {

// 0 is the root throughout.  Nine edges on three vertices, decomposed into
// two closed up chains (the second one passing through extra vertices) and
// two closed down chains; used to exercise the validator and minimalizer on
// chains that are valid but not minimal.

struct fixture {
    multigraph g;
    chain_decomposition d;
};

// G1 is a closed up chain running through the root internally.
fixture closed_chain_through_root() {
    fixture f;
    for (int i = 0; i < 3; ++i) f.g.add_vertex();
    f.g.add_edge(0, 1);  // e0
    f.g.add_edge(0, 1);  // e1
    f.g.add_edge(1, 2);  // e2
    f.g.add_edge(2, 0);  // e3
    f.g.add_edge(0, 1);  // e4
    f.g.add_edge(1, 2);  // e5
    f.g.add_edge(1, 2);  // e6
    f.g.add_edge(0, 1);  // e7
    f.g.add_edge(0, 1);  // e8
    f.d.root = 0;
    f.d.chains = {
        chain{chain_kind::up, {0, 1}, {0, 1, 0}},
        chain{chain_kind::up, {2, 3, 4}, {1, 2, 0, 1}},
        chain{chain_kind::down, {5, 6}, {1, 2, 1}},
        chain{chain_kind::down, {7, 8}, {0, 1, 0}},
    };
    f.d.rebuild_index();
    return f;
}

// G1 is an open up chain whose middle vertex already sits in the prefix.
fixture chain_with_anchored_middle() {
    fixture f;
    for (int i = 0; i < 3; ++i) f.g.add_vertex();
    f.g.add_edge(0, 1);  // e0
    f.g.add_edge(1, 2);  // e1
    f.g.add_edge(2, 0);  // e2
    f.g.add_edge(0, 1);  // e3
    f.g.add_edge(1, 2);  // e4
    f.g.add_edge(1, 2);  // e5
    f.g.add_edge(1, 2);  // e6
    f.g.add_edge(0, 1);  // e7
    f.g.add_edge(0, 1);  // e8
    f.d.root = 0;
    f.d.chains = {
        chain{chain_kind::up, {0, 1, 2}, {0, 1, 2, 0}},
        chain{chain_kind::up, {3, 4}, {0, 1, 2}},
        chain{chain_kind::down, {5, 6}, {1, 2, 1}},
        chain{chain_kind::down, {7, 8}, {0, 1, 0}},
    };
    f.d.rebuild_index();
    return f;
}

std::set<int> all_chain_edges(const chain_decomposition& d) {
    std::set<int> s;
    for (const auto& c : d.chains) s.insert(c.edges.begin(), c.edges.end());
    return s;
}

} // namespace

TEST_CASE("the base decomposition validates and its mirror does too") {
    auto [g, seq] = base_graph();
    chain_decomposition d = base_decomposition(seq.root, seq.partner, seq.base_edges);
    CHECK(validate(g, d).ok());
    CHECK(is_minimal(d));
    CHECK(validate(g, reverse_decomposition(d)).ok());
}

TEST_CASE("the validator rejects the base chains in swapped order") {
    auto [g, seq] = base_graph();
    chain_decomposition d = base_decomposition(seq.root, seq.partner, seq.base_edges);
    std::swap(d.chains[0], d.chains[1]);
    d.rebuild_index();
    auto rep = validate(g, d);
    CHECK(!rep.ok());
}

TEST_CASE("a single vertex with no chains is a valid decomposition") {
    multigraph g;
    g.add_vertex();
    chain_decomposition d;
    d.root = 0;
    CHECK(validate(g, d).ok());
}

TEST_CASE("reverse is an involution and flips one-way arcs") {
    auto [g, seq] = base_graph();
    int extra = g.add_edge(0, 1);
    chain_decomposition d = base_decomposition(seq.root, seq.partner, seq.base_edges);
    d.chains.insert(d.chains.begin(), make_one_way(extra, 0, 1));
    d.rebuild_index();
    REQUIRE(validate(g, d).ok());

    chain_decomposition r = reverse_decomposition(d);
    CHECK(validate(g, r).ok());
    const chain& last = r.chains.back();
    CHECK(last.kind == chain_kind::one_way);
    CHECK(last.tail() == 1);
    CHECK(last.head() == 0); // tail r at the front becomes head r at the back

    chain_decomposition rr = reverse_decomposition(r);
    CHECK(rr.chains == d.chains);
    CHECK(rr.root == d.root);
}

TEST_CASE("minimalize leaves minimal decompositions alone") {
    auto [g, seq] = base_graph();
    chain_decomposition d = base_decomposition(seq.root, seq.partner, seq.base_edges);
    chain_decomposition m = minimalize(d);
    CHECK(m.chains == d.chains);
}

TEST_CASE("minimalize splits an up chain at a prefix-anchored middle vertex") {
    fixture f = chain_with_anchored_middle();
    REQUIRE(validate(f.g, f.d).ok());
    CHECK(!is_minimal(f.d));

    chain_decomposition m = minimalize(f.d);
    CHECK(validate(f.g, m).ok());
    CHECK(is_minimal(m));
    CHECK(m.chains.size() == f.d.chains.size() + 1);
    CHECK(all_chain_edges(m) == all_chain_edges(f.d));
    // the non-minimal open chain became two one-edge up chains
    CHECK(m.chains[1].edges == std::vector<int>{3});
    CHECK(m.chains[2].edges == std::vector<int>{4});
    CHECK(m.chains[1].kind == chain_kind::up);
    CHECK(m.chains[2].kind == chain_kind::up);
}

TEST_CASE("minimalize splits a closed chain passing through the root") {
    fixture f = closed_chain_through_root();
    REQUIRE(validate(f.g, f.d).ok());
    CHECK(!is_minimal(f.d));

    chain_decomposition m = minimalize(f.d);
    CHECK(validate(f.g, m).ok());
    CHECK(is_minimal(m));
    CHECK(all_chain_edges(m) == all_chain_edges(f.d));
    // split at the root into open chains ending there
    CHECK(m.chains[1].edges == std::vector<int>{2, 3});
    CHECK(m.chains[2].edges == std::vector<int>{4});
    CHECK(!m.chains[1].is_closed());
    CHECK(!m.chains[2].is_closed());
    CHECK(m.chains[1].head() == 0);
    CHECK(m.chains[2].tail() == 0);
}

TEST_CASE("reversal preserves validity in both directions") {
    fixture f = chain_with_anchored_middle();
    REQUIRE(validate(f.g, f.d).ok());
    CHECK(validate(f.g, reverse_decomposition(f.d)).ok());

    chain_decomposition broken = f.d;
    broken.chains[1].kind = chain_kind::one_way; // two edges cannot be an arc
    broken.rebuild_index();
    CHECK(!validate(f.g, broken).ok());
    CHECK(!validate(f.g, reverse_decomposition(broken)).ok());
}

TEST_CASE("validate flags partition defects") {
    auto [g, seq] = base_graph();
    chain_decomposition d = base_decomposition(seq.root, seq.partner, seq.base_edges);
    d.chains[1].edges.pop_back(); // edge 3 no longer covered
    d.chains[1].vertices = {0, 1};
    d.rebuild_index();
    auto rep = validate(g, d);
    CHECK(!rep.ok());
}
