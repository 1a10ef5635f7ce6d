#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "eist/connectivity.hpp"
#include "eist/errors.hpp"
#include "eist/multigraph.hpp"

namespace eist {

// The two Mader operations.  Every id a forward application creates is
// recorded in the op, so replaying a sequence reproduces the original graph
// exactly (same vertex and edge ids).
struct add_edge_op {
    int u, v;
    int new_edge;
};

// Pinch two distinct edges e1 = {x,y}, e2 = {z,w}: delete them, add a new
// vertex, and join it to x, y, z, w by fresh edges ex, ey, ez, ew.  The
// suture edges map to the *stored* endpoint order of e1/e2: ex attaches to
// ends(e1).first, ey to ends(e1).second, and likewise ez/ew for e2.
struct pinch_op {
    int e1, e2;
    int new_vertex;
    int ex, ey, ez, ew;
};

using mader_op = std::variant<add_edge_op, pinch_op>;

// A recorded construction: the 2-vertex / 4-parallel-edge start graph plus
// the ordered ops that grow it into the target.
struct mader_sequence {
    int root = 0;
    int partner = 1;
    std::array<int, 4> base_edges{0, 1, 2, 3};
    std::vector<mader_op> ops;
};

inline multigraph base_graph_of(const mader_sequence& seq) {
    multigraph g;
    g.add_vertex_with_id(seq.root);
    g.add_vertex_with_id(seq.partner);
    for (int e : seq.base_edges) g.add_edge_with_id(e, seq.root, seq.partner);
    return g;
}

inline std::pair<multigraph, mader_sequence> base_graph() {
    mader_sequence seq;
    return {base_graph_of(seq), seq};
}

inline void apply_op(multigraph& g, const mader_op& op) {
    if (const auto* add = std::get_if<add_edge_op>(&op)) {
        g.add_edge_with_id(add->new_edge, add->u, add->v);
        return;
    }
    const auto& p = std::get<pinch_op>(op);
    if (p.e1 == p.e2) throw std::invalid_argument("pinch needs two distinct edges");
    auto [x, y] = g.ends(p.e1);
    auto [z, w] = g.ends(p.e2);
    g.delete_edge(p.e1);
    g.delete_edge(p.e2);
    g.add_vertex_with_id(p.new_vertex);
    g.add_edge_with_id(p.ex, p.new_vertex, x);
    g.add_edge_with_id(p.ey, p.new_vertex, y);
    g.add_edge_with_id(p.ez, p.new_vertex, z);
    g.add_edge_with_id(p.ew, p.new_vertex, w);
}

inline multigraph replay(const mader_sequence& seq) {
    multigraph g = base_graph_of(seq);
    for (const auto& op : seq.ops) apply_op(g, op);
    return g;
}

// Smallest-id edge whose removal keeps the graph 4-edge-connected, if any.
// Loops always qualify (they lie in no cut).  For a non-loop edge {u,v} the
// only cuts that shrink are those separating u from v, so one early-exit
// flow query decides; the degree filter discards most candidates first.
inline std::optional<int> find_deletable_edge(const multigraph& g) {
    for (const auto& [e, uv] : g.edges()) {
        auto [u, v] = uv;
        if (u == v) return e;
        if (g.nonloop_degree(u) < 5 || g.nonloop_degree(v) < 5) continue;
        multigraph h = g;
        h.delete_edge(e);
        if (has_flow_at_least(h, u, v, 4)) return e;
    }
    return std::nullopt;
}

// Splitting off: the reverse of a pinch.  Tries the three pairings of v's
// four incident edges in canonical (id) order, keeps the first one whose
// sutured graph is still 4-edge-connected, and returns that graph together
// with the pinch op that recreates v.
inline std::pair<pinch_op, multigraph> split_off(const multigraph& g, int v, int root) {
    if (v == root) throw std::invalid_argument("cannot split off the root");
    std::vector<int> inc = g.incident_edges(v);
    std::sort(inc.begin(), inc.end());
    if (inc.size() != 4 || g.degree(v) != 4)
        throw std::invalid_argument("split_off needs a loopless degree-4 vertex");

    // Pairings of {0,1,2,3}: partner of slot 0, then the remaining two.
    static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& p : pairings) {
        multigraph h = g;
        std::array<int, 4> other;
        for (int k = 0; k < 4; ++k) other[k] = g.other_end(inc[p[k]], v);
        for (int e : inc) h.delete_edge(e);
        int s1 = h.add_edge(other[0], other[1]);
        int s2 = h.add_edge(other[2], other[3]);
        h.prune_isolated(v);
        if (is_4_edge_connected(h)) {
            // ex must end up at ends(e1).first when the pinch replays, so
            // follow the normalized endpoint order of the sutures.
            pinch_op op;
            op.e1 = s1;
            op.e2 = s2;
            op.new_vertex = v;
            bool flip1 = h.ends(s1).first != other[0];
            op.ex = inc[p[flip1 ? 1 : 0]];
            op.ey = inc[p[flip1 ? 0 : 1]];
            bool flip2 = h.ends(s2).first != other[2];
            op.ez = inc[p[flip2 ? 3 : 2]];
            op.ew = inc[p[flip2 ? 2 : 3]];
            return {op, std::move(h)};
        }
    }
    throw internal_error("splitting-off failed at vertex " + std::to_string(v));
}

// Reduce g to the base graph, recording the reversed operations: delete a
// deletable edge while one exists, otherwise split off the smallest-id
// degree-4 vertex other than the root.  Requires a 4-edge-connected input;
// otherwise throws with the witness cut.
inline mader_sequence extract_sequence(const multigraph& g, int root) {
    if (g.vertex_count() < 2) throw std::invalid_argument("need at least 2 vertices");
    if (!g.has_vertex(root)) throw std::invalid_argument("unknown root vertex");
    if (!is_4_edge_connected(g)) throw not_four_edge_connected(edge_connectivity(g).cut_edges);

    multigraph cur = g;
    std::vector<mader_op> reversed;
    while (!(cur.vertex_count() == 2 && cur.edge_count() == 4)) {
        if (auto e = find_deletable_edge(cur)) {
            auto [u, v] = cur.ends(*e);
            cur.delete_edge(*e);
            reversed.push_back(add_edge_op{u, v, *e});
            continue;
        }
        // Minimally 4-edge-connected now; a degree-4 vertex != root exists
        // and no loops remain (a loop would have been deletable).
        int victim = -1;
        for (int v : cur.vertices())
            if (v != root && cur.degree(v) == 4) {
                victim = v;
                break;
            }
        if (victim < 0) throw internal_error("no degree-4 vertex available to split off");
        auto [op, next] = split_off(cur, victim, root);
        reversed.push_back(op);
        cur = std::move(next);
    }

    mader_sequence seq;
    seq.root = root;
    auto vs = cur.vertices();
    seq.partner = vs[0] == root ? vs[1] : vs[0];
    auto es = cur.edge_ids();
    std::copy(es.begin(), es.end(), seq.base_edges.begin());
    seq.ops.assign(reversed.rbegin(), reversed.rend());
    return seq;
}

// Seeded generator of 4-edge-connected instances: starts from the base
// graph and applies n_ops random Mader operations, pinching with the given
// bias.  Index picks go through rng() % n directly so the output depends
// only on the seed, not on the standard library's distribution internals.
inline std::pair<multigraph, mader_sequence> random_4ec(std::uint64_t seed, int n_ops,
                                                        double pinch_bias = 0.7) {
    if (n_ops < 0) throw std::invalid_argument("n_ops must be >= 0");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    auto [g, seq] = base_graph();
    for (int step = 0; step < n_ops; ++step) {
        bool pinch = (rng() % 1000000) < static_cast<std::uint64_t>(pinch_bias * 1000000);
        if (pinch) {
            auto es = g.edge_ids();
            std::size_t a = pick(es.size());
            std::size_t b = pick(es.size() - 1);
            if (b >= a) ++b;
            pinch_op op;
            op.e1 = es[a];
            op.e2 = es[b];
            auto [x, y] = g.ends(op.e1);
            auto [z, w] = g.ends(op.e2);
            g.delete_edge(op.e1);
            g.delete_edge(op.e2);
            op.new_vertex = g.add_vertex();
            op.ex = g.add_edge(op.new_vertex, x);
            op.ey = g.add_edge(op.new_vertex, y);
            op.ez = g.add_edge(op.new_vertex, z);
            op.ew = g.add_edge(op.new_vertex, w);
            seq.ops.emplace_back(op);
        } else {
            auto vs = g.vertices();
            int u = vs[pick(vs.size())];
            int v = vs[pick(vs.size())];
            add_edge_op op{u, v, g.add_edge(u, v)};
            seq.ops.emplace_back(op);
        }
    }
    return {std::move(g), std::move(seq)};
}

} // namespace eist
