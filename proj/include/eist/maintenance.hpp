#pragma once

#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eist/chains.hpp"
#include "eist/errors.hpp"
#include "eist/mader.hpp"
#include "eist/multigraph.hpp"

namespace eist {

// Which maintenance branch handled each operation, keyed by a stable label
// ("claim1", "claim2.y.case3", "claim3.case4.head", "add.root", ...).  The
// acceptance suite uses this to prove every branch is exercised.
struct maintenance_stats {
    std::map<std::string, int> branch_counts;
    void record(const std::string& label) { ++branch_counts[label]; }
};

namespace detail {

// ---- edit scripts -------------------------------------------------------
//
// A pinch rewrites at most four positions of the chain list.  Edits are
// expressed against the *original* indices and applied in one sweep, so no
// position bookkeeping is needed while composing the two sides of a claim.

struct edit_script {
    std::map<int, std::vector<chain>> before;     // insert before original index
    std::map<int, std::vector<chain>> after;      // insert after original index
    std::map<int, std::vector<chain>> substitute; // replace chain (empty = delete)
};

inline void merge_into(edit_script& dst, edit_script&& src) {
    for (auto& [k, block] : src.before)
        for (auto& c : block) dst.before[k].push_back(std::move(c));
    for (auto& [k, block] : src.after)
        for (auto& c : block) dst.after[k].push_back(std::move(c));
    for (auto& [k, block] : src.substitute) {
        if (dst.substitute.count(k)) throw internal_error("conflicting chain replacements at index " + std::to_string(k));
        dst.substitute[k] = std::move(block);
    }
}

inline chain_decomposition apply_edits(const chain_decomposition& d, const edit_script& s) {
    chain_decomposition out;
    out.root = d.root;
    for (int k = 0; k < static_cast<int>(d.chains.size()); ++k) {
        if (auto it = s.before.find(k); it != s.before.end())
            for (const chain& c : it->second) out.chains.push_back(c);
        if (auto it = s.substitute.find(k); it != s.substitute.end())
            for (const chain& c : it->second) out.chains.push_back(c);
        else
            out.chains.push_back(d.chains[k]);
        if (auto it = s.after.find(k); it != s.after.end())
            for (const chain& c : it->second) out.chains.push_back(c);
    }
    out.rebuild_index();
    return out;
}

// Map a script computed on the reversed decomposition back to the original
// coordinates: index k becomes n-1-k, before/after swap, blocks reverse,
// and every chain flips.
inline edit_script translate_from_reversed(const edit_script& s, int n) {
    auto flip_block = [](const std::vector<chain>& block) {
        std::vector<chain> out;
        for (auto it = block.rbegin(); it != block.rend(); ++it) out.push_back(flip_chain(*it));
        return out;
    };
    edit_script t;
    for (const auto& [k, block] : s.before) t.after[n - 1 - k] = flip_block(block);
    for (const auto& [k, block] : s.after) t.before[n - 1 - k] = flip_block(block);
    for (const auto& [k, block] : s.substitute) t.substitute[n - 1 - k] = flip_block(block);
    return t;
}

// ---- pinch context ------------------------------------------------------

// The pinch normalized for maintenance: ci1 <= ci2, and whenever the chain
// of a pinched edge is one-way, (x, y) resp. (z, w) are its (tail, head).
// ex stays the suture at x throughout the relabelling, and so on.
struct pinch_context {
    int e1, x, y, ex, ey;
    int e2, z, w, ez, ew;
    int ci1, ci2;
    int v; // the new vertex
    bool e1_loop, e2_loop;
};

inline pinch_context reversed_context(const pinch_context& c, int n) {
    pinch_context r;
    r.e1 = c.e2; r.x = c.w; r.y = c.z; r.ex = c.ew; r.ey = c.ez;
    r.e2 = c.e1; r.z = c.y; r.w = c.x; r.ez = c.ey; r.ew = c.ex;
    r.ci1 = n - 1 - c.ci2;
    r.ci2 = n - 1 - c.ci1;
    r.v = c.v;
    r.e1_loop = c.e2_loop;
    r.e2_loop = c.e1_loop;
    return r;
}

inline pinch_context make_context(const multigraph& g_post, const chain_decomposition& d, const pinch_op& op) {
    pinch_context c;
    c.v = op.new_vertex;
    c.e1 = op.e1; c.ex = op.ex; c.ey = op.ey;
    c.e2 = op.e2; c.ez = op.ez; c.ew = op.ew;
    c.x = g_post.other_end(op.ex, c.v);
    c.y = g_post.other_end(op.ey, c.v);
    c.z = g_post.other_end(op.ez, c.v);
    c.w = g_post.other_end(op.ew, c.v);
    c.ci1 = d.ci(c.e1);
    c.ci2 = d.ci(c.e2);
    if (c.ci1 > c.ci2) {
        std::swap(c.e1, c.e2);
        std::swap(c.x, c.z);
        std::swap(c.y, c.w);
        std::swap(c.ex, c.ez);
        std::swap(c.ey, c.ew);
        std::swap(c.ci1, c.ci2);
    }
    c.e1_loop = c.x == c.y;
    c.e2_loop = c.z == c.w;
    auto orient = [&d](int ci, int& a, int& b, int& ea, int& eb) {
        const chain& ch = d.chains[ci];
        if (ch.kind != chain_kind::one_way) return;
        if (ch.tail() != a) {
            std::swap(a, b);
            std::swap(ea, eb);
        }
    };
    if (c.ci1 != c.ci2) {
        orient(c.ci1, c.x, c.y, c.ex, c.ey);
        orient(c.ci2, c.z, c.w, c.ez, c.ew);
    }
    return c;
}

// ---- queries against the pre-pinch graph --------------------------------
//
// The pre-pinch graph is recoverable from the post graph: drop the four
// sutures, restore e1 and e2.  Only degree/membership queries for y and z
// are needed, so this stays implicit.

struct pre_graph_view {
    const multigraph& g_post;
    const chain_decomposition& d;
    const pinch_context& c;

    // Degree of vertex a within chains [lo, hi), loops counting twice.
    int degree_in_chains(int a, int lo, int hi) const {
        int deg = 0;
        for (int e : g_post.incident_edges(a)) {
            if (e == c.ex || e == c.ey || e == c.ez || e == c.ew) continue;
            int idx = d.ci(e);
            if (lo <= idx && idx < hi) deg += g_post.is_loop(e) ? 2 : 1;
        }
        if (lo <= c.ci1 && c.ci1 < hi) deg += (c.x == a) + (c.y == a);
        if (lo <= c.ci2 && c.ci2 < hi) deg += (c.z == a) + (c.w == a);
        return deg;
    }

    // Smallest / largest chain index in the open interval (lo, hi) whose
    // chain touches vertex a.
    std::optional<int> min_chain_between(int a, int lo, int hi) const {
        std::optional<int> best;
        auto consider = [&](int idx) {
            if (idx > lo && idx < hi && (!best || idx < *best)) best = idx;
        };
        scan(a, consider);
        return best;
    }
    std::optional<int> max_chain_between(int a, int lo, int hi) const {
        std::optional<int> best;
        auto consider = [&](int idx) {
            if (idx > lo && idx < hi && (!best || idx > *best)) best = idx;
        };
        scan(a, consider);
        return best;
    }

private:
    template <class F> void scan(int a, F&& consider) const {
        for (int e : g_post.incident_edges(a)) {
            if (e == c.ex || e == c.ey || e == c.ez || e == c.ew) continue;
            consider(d.ci(e));
        }
        if (c.x == a || c.y == a) consider(c.ci1);
        if (c.z == a || c.w == a) consider(c.ci2);
    }
};

// ---- walk helpers -------------------------------------------------------

inline std::size_t edge_pos(const chain& c, int e) {
    for (std::size_t k = 0; k < c.edges.size(); ++k)
        if (c.edges[k] == e) return k;
    throw internal_error("edge " + std::to_string(e) + " not on its chain");
}

inline chain sub_chain(const chain& c, std::size_t from, std::size_t to, chain_kind kind) {
    chain out;
    out.kind = kind;
    out.edges.assign(c.edges.begin() + from, c.edges.begin() + to);
    out.vertices.assign(c.vertices.begin() + from, c.vertices.begin() + to + 1);
    return out;
}

// Align (a, b) and their sutures with the walk orientation of edge at
// position pos: afterwards a == walk[pos] and b == walk[pos+1].
inline void align_with_walk(const chain& ch, std::size_t pos, int& a, int& b, int& ea, int& eb) {
    if (ch.vertices[pos] != a) {
        std::swap(a, b);
        std::swap(ea, eb);
    }
    if (ch.vertices[pos] != a || ch.vertices[pos + 1] != b)
        throw internal_error("pinched edge endpoints disagree with chain walk");
}

// ---- Claim 1: both pinched edges on the same chain -----------------------
//
// The shared chain P_x e1 M e2 P_w (up, after orientation) becomes
//   P_x ex ew P_w,  then one-way ey (v -> y),  one-way ez (v -> z),
//   then M when it has edges.
// The down case runs through the reversed decomposition.

inline edit_script claim1_edits(const chain_decomposition& d, pinch_context c) {
    const int I = c.ci1;
    chain ch = d.chains[I];
    if (ch.kind != chain_kind::up) throw internal_error("claim1_edits expects an up chain");
    orient_canonically(ch);
    std::size_t p1 = edge_pos(ch, c.e1), p2 = edge_pos(ch, c.e2);
    if (p1 > p2) {
        std::swap(p1, p2);
        std::swap(c.e1, c.e2);
        std::swap(c.x, c.z);
        std::swap(c.y, c.w);
        std::swap(c.ex, c.ez);
        std::swap(c.ey, c.ew);
    }
    align_with_walk(ch, p1, c.x, c.y, c.ex, c.ey);
    align_with_walk(ch, p2, c.z, c.w, c.ez, c.ew);

    chain joined;
    joined.kind = chain_kind::up;
    joined.edges.assign(ch.edges.begin(), ch.edges.begin() + p1);
    joined.edges.push_back(c.ex);
    joined.edges.push_back(c.ew);
    joined.edges.insert(joined.edges.end(), ch.edges.begin() + p2 + 1, ch.edges.end());
    joined.vertices.assign(ch.vertices.begin(), ch.vertices.begin() + p1 + 1);
    joined.vertices.push_back(c.v);
    joined.vertices.insert(joined.vertices.end(), ch.vertices.begin() + p2 + 1, ch.vertices.end());

    std::vector<chain> block{joined, make_one_way(c.ey, c.v, c.y), make_one_way(c.ez, c.v, c.z)};
    if (p2 > p1 + 1) block.push_back(sub_chain(ch, p1 + 1, p2, chain_kind::up));

    edit_script s;
    s.substitute[I] = std::move(block);
    return s;
}

// ---- Claim 2: a one-way chain whose head has no other edge below ci2 -----
//
// J1 shrinks to the one-way ex (x -> v); the whole block at ci2 is rebuilt
// and absorbs ey, ez, ew.  Loop chains at ci2 fall out of the same cases
// with empty side paths.

inline edit_script claim2_edits(const chain_decomposition& d, pinch_context c, std::string& label) {
    edit_script s;
    s.substitute[c.ci1] = {make_one_way(c.ex, c.x, c.v)};

    chain ch = d.chains[c.ci2];
    std::vector<chain> block;
    if (ch.kind == chain_kind::up) {
        label += ".case1";
        // The end sitting in P_z must not be y: its anchor condition has to
        // survive ey moving to this block.
        if (!ch.is_closed() && ch.vertices.front() == c.y) {
            std::reverse(ch.edges.begin(), ch.edges.end());
            std::reverse(ch.vertices.begin(), ch.vertices.end());
        } else if (!(!ch.is_closed() && ch.vertices.back() == c.y)) {
            orient_canonically(ch);
        }
        std::size_t pos = edge_pos(ch, c.e2);
        align_with_walk(ch, pos, c.z, c.w, c.ez, c.ew);
        chain front = sub_chain(ch, 0, pos, chain_kind::up);
        front.edges.push_back(c.ez);
        front.vertices.push_back(c.v);
        block.push_back(std::move(front));
        block.push_back(make_one_way(c.ey, c.v, c.y));
        block.push_back(make_one_way(c.ew, c.v, c.w));
        if (pos + 1 < ch.edges.size()) block.push_back(sub_chain(ch, pos + 1, ch.edges.size(), chain_kind::up));
    } else if (ch.kind == chain_kind::down) {
        label += ".case2";
        orient_canonically(ch);
        std::size_t pos = edge_pos(ch, c.e2);
        align_with_walk(ch, pos, c.z, c.w, c.ez, c.ew);
        if (pos + 1 < ch.edges.size()) block.push_back(sub_chain(ch, pos + 1, ch.edges.size(), chain_kind::down));
        block.push_back(make_one_way(c.ew, c.w, c.v));
        chain front = sub_chain(ch, 0, pos, chain_kind::down);
        front.edges.push_back(c.ez);
        front.vertices.push_back(c.v);
        block.push_back(std::move(front));
        block.push_back(make_one_way(c.ey, c.v, c.y));
    } else {
        label += ".case3";
        block.push_back(make_one_way(c.ez, c.z, c.v));
        block.push_back(make_one_way(c.ew, c.v, c.w));
        block.push_back(make_one_way(c.ey, c.v, c.y));
    }
    s.substitute[c.ci2] = std::move(block);
    return s;
}

// ---- Claim 3 side replacement --------------------------------------------
//
// Rewrites the J1 side only; the J2 side is the same procedure on the
// reversed decomposition.  `mid` receives the index the head's new edge was
// anchored to (the conditional index), when one exists.
//
// A pinched loop always forms its own chain; that chain is replaced by the
// closed up chain ex ey through the new vertex, which inherits the loop
// vertex's conditions no matter the old chain kind.

inline edit_script claim3_side_edits(const chain_decomposition& d, const pre_graph_view& pre,
                                     pinch_context c, std::string& label) {
    edit_script s;
    if (c.e1_loop) {
        label += ".loop";
        s.substitute[c.ci1] = {chain{chain_kind::up, {c.ex, c.ey}, {c.x, c.v, c.x}}};
        return s;
    }
    chain ch = d.chains[c.ci1];
    if (ch.kind == chain_kind::up) {
        label += ".case1";
        orient_canonically(ch);
        std::size_t pos = edge_pos(ch, c.e1);
        align_with_walk(ch, pos, c.x, c.y, c.ex, c.ey);
        chain joined;
        joined.kind = chain_kind::up;
        joined.edges.assign(ch.edges.begin(), ch.edges.begin() + pos);
        joined.edges.push_back(c.ex);
        joined.edges.push_back(c.ey);
        joined.edges.insert(joined.edges.end(), ch.edges.begin() + pos + 1, ch.edges.end());
        joined.vertices.assign(ch.vertices.begin(), ch.vertices.begin() + pos + 1);
        joined.vertices.push_back(c.v);
        joined.vertices.insert(joined.vertices.end(), ch.vertices.begin() + pos + 1, ch.vertices.end());
        s.substitute[c.ci1] = {std::move(joined)};
        return s;
    }
    if (ch.kind == chain_kind::down) {
        label += ".case2";
        orient_canonically(ch);
        std::size_t pos = edge_pos(ch, c.e1);
        align_with_walk(ch, pos, c.x, c.y, c.ex, c.ey);
        std::vector<chain> block;
        if (pos > 0) block.push_back(sub_chain(ch, 0, pos, chain_kind::down));
        if (pos + 1 < ch.edges.size()) block.push_back(sub_chain(ch, pos + 1, ch.edges.size(), chain_kind::down));
        block.push_back(make_one_way(c.ex, c.x, c.v));
        block.push_back(make_one_way(c.ey, c.y, c.v));
        s.substitute[c.ci1] = std::move(block);
        return s;
    }

    // One-way J1, x = tail, y = head.
    if (pre.degree_in_chains(c.y, 0, c.ci1) >= 1) {
        label += ".case3";
        s.substitute[c.ci1] = {make_one_way(c.ex, c.x, c.v), chain{chain_kind::up, {c.ey}, {c.y, c.v}}};
        return s;
    }
    // Head first reappears strictly between the two pinched chains.
    auto mid = pre.min_chain_between(c.y, c.ci1, c.ci2);
    if (!mid) throw internal_error("claim3: no intermediate chain for the one-way head");
    s.substitute[c.ci1] = {make_one_way(c.ex, c.x, c.v)};
    const chain& anchor = d.chains[*mid];
    if (anchor.kind == chain_kind::up) {
        label += ".case4.end";
        if (anchor.is_closed()) throw internal_error("claim3: head anchored at a closed up chain");
        chain extended = anchor;
        if (extended.vertices.front() == c.y) {
            extended.edges.insert(extended.edges.begin(), c.ey);
            extended.vertices.insert(extended.vertices.begin(), c.v);
        } else if (extended.vertices.back() == c.y) {
            extended.edges.push_back(c.ey);
            extended.vertices.push_back(c.v);
        } else {
            throw internal_error("claim3: head is not an end of its anchor chain");
        }
        s.substitute[*mid] = {std::move(extended)};
    } else if (anchor.kind == chain_kind::one_way) {
        label += ".case4.head";
        if (anchor.head() != c.y || anchor.tail() == anchor.head())
            throw internal_error("claim3: anchor one-way chain does not end at the head");
        s.after[*mid].push_back(chain{chain_kind::up, {c.ey}, {c.y, c.v}});
    } else {
        throw internal_error("claim3: head anchored at a down chain");
    }
    return s;
}

// ---- Claims 4 and 5: both conditional indices defined ---------------------

inline edit_script claim4_edits(const chain_decomposition& d, const pinch_context& c, int mid) {
    const chain& anchor = d.chains[mid];
    if (anchor.kind != chain_kind::one_way || anchor.tail() != c.z || anchor.head() != c.y)
        throw internal_error("claim4: middle chain must be one-way z -> y");
    edit_script s;
    s.substitute[c.ci1] = {};
    s.substitute[c.ci2] = {};
    s.before[mid] = {make_one_way(c.ex, c.x, c.v), make_one_way(c.ez, c.z, c.v)};
    s.after[mid] = {make_one_way(c.ey, c.v, c.y), make_one_way(c.ew, c.v, c.w)};
    return s;
}

inline edit_script claim5_edits(const pinch_context& c, int i, int j) {
    edit_script s;
    s.substitute[c.ci1] = {make_one_way(c.ex, c.x, c.v)};
    s.after[j].push_back(make_one_way(c.ez, c.z, c.v));
    s.before[i].push_back(make_one_way(c.ey, c.v, c.y));
    s.substitute[c.ci2] = {make_one_way(c.ew, c.v, c.w)};
    return s;
}

} // namespace detail

// Rethread the decomposition after an edge addition: the new edge becomes a
// one-way chain, at the very front when an end is the root, otherwise just
// before the first index where an endpoint reaches degree exactly two in
// the prefix.  The result is valid but possibly no longer minimal.
inline chain_decomposition maintain_add_edge(const multigraph& g, const chain_decomposition& d, int e,
                                             maintenance_stats* stats = nullptr) {
    auto [u, v] = g.ends(e);
    int root = d.root;
    chain_decomposition out;
    out.root = root;

    if (u == root || v == root) {
        if (stats) stats->record("add.root");
        int head = u == root ? v : u;
        out.chains.push_back(make_one_way(e, root, head));
        out.chains.insert(out.chains.end(), d.chains.begin(), d.chains.end());
    } else {
        if (stats) stats->record("add.nonroot");
        int n = static_cast<int>(d.chains.size());
        int du = 0, dv = 0, insert_at = -1, tail = -1;
        for (int i = 1; i < n; ++i) {
            auto deg = detail::chain_degrees(g, d.chains[i - 1]);
            if (auto it = deg.find(u); it != deg.end()) du += it->second;
            if (auto it = deg.find(v); it != deg.end()) dv += it->second;
            if (du == 2 || dv == 2) {
                insert_at = i;
                if (du == 2 && dv == 2)
                    tail = std::min(u, v);
                else
                    tail = du == 2 ? u : v;
                break;
            }
        }
        if (insert_at < 0) throw internal_error("add-edge: no prefix gives an endpoint degree exactly two");
        out.chains.assign(d.chains.begin(), d.chains.begin() + insert_at);
        out.chains.push_back(make_one_way(e, tail, tail == u ? v : u));
        out.chains.insert(out.chains.end(), d.chains.begin() + insert_at, d.chains.end());
    }
    out.rebuild_index();
    if (auto rep = validate(g, out); !rep.ok())
        throw internal_error("add-edge maintenance produced an invalid decomposition: " + rep.violations.front());
    return out;
}

// Rethread the decomposition after a pinch.  Dispatches on the claim
// analysis of the two pinched chains; exactly one branch applies.  The
// returned decomposition validates against the post-pinch graph but may
// need re-minimalizing.
inline chain_decomposition maintain_pinch(const multigraph& g, const chain_decomposition& d, const pinch_op& op,
                                          maintenance_stats* stats = nullptr) {
    using namespace detail;
    const int n = static_cast<int>(d.chains.size());
    pinch_context c = make_context(g, d, op);
    pre_graph_view pre{g, d, c};
    chain_decomposition rd;       // reversed view, built on demand
    auto reversed_view = [&]() -> chain_decomposition& {
        if (rd.chains.empty()) rd = reverse_decomposition(d);
        return rd;
    };

    std::string label;
    chain_decomposition out;

    if (c.ci1 == c.ci2) {
        label = "claim1";
        const chain& ch = d.chains[c.ci1];
        if (ch.kind == chain_kind::one_way) throw internal_error("claim1: one-way chain cannot hold two edges");
        if (ch.kind == chain_kind::up) {
            out = apply_edits(d, claim1_edits(d, c));
        } else {
            auto& rdd = reversed_view();
            edit_script s = claim1_edits(rdd, reversed_context(c, n));
            out = apply_edits(d, translate_from_reversed(s, n));
        }
    } else {
        const chain& j1 = d.chains[c.ci1];
        const chain& j2 = d.chains[c.ci2];
        bool y_guard = !c.e1_loop && j1.kind == chain_kind::one_way && pre.degree_in_chains(c.y, 0, c.ci2) == 1;
        bool z_guard = !c.e2_loop && j2.kind == chain_kind::one_way && pre.degree_in_chains(c.z, c.ci1 + 1, n) == 1;
        if (y_guard) {
            label = "claim2.y";
            out = apply_edits(d, claim2_edits(d, c, label));
        } else if (z_guard) {
            label = "claim2.z";
            auto& rdd = reversed_view();
            pinch_context rc = reversed_context(c, n);
            edit_script s = claim2_edits(rdd, rc, label);
            out = apply_edits(d, translate_from_reversed(s, n));
        } else {
            std::optional<int> i, j;
            if (!c.e1_loop && j1.kind == chain_kind::one_way && pre.degree_in_chains(c.y, 0, c.ci1) == 0)
                i = pre.min_chain_between(c.y, c.ci1, c.ci2);
            if (!c.e2_loop && j2.kind == chain_kind::one_way && pre.degree_in_chains(c.z, c.ci2 + 1, n) == 0)
                j = pre.max_chain_between(c.z, c.ci1, c.ci2);
            if (i && j && *i == *j) {
                label = "claim4";
                out = apply_edits(d, claim4_edits(d, c, *i));
            } else if (i && j && *i > *j) {
                label = "claim5";
                out = apply_edits(d, claim5_edits(c, *i, *j));
            } else {
                label = "claim3";
                edit_script s = claim3_side_edits(d, pre, c, label);
                auto& rdd = reversed_view();
                pinch_context rc = reversed_context(c, n);
                pre_graph_view rpre{g, rdd, rc};
                edit_script s2 = claim3_side_edits(rdd, rpre, rc, label);
                merge_into(s, translate_from_reversed(s2, n));
                out = apply_edits(d, s);
            }
        }
    }

    if (stats) stats->record(label);
    if (auto rep = validate(g, out); !rep.ok())
        throw internal_error(label + " produced an invalid decomposition: " + rep.violations.front());
    return out;
}

// Replay a construction from its base decomposition, maintaining and
// re-minimalizing the chain decomposition across every operation.  The
// per-step validation stays on: the validator is the executable form of the
// correctness argument, and it is cheap.
inline std::pair<multigraph, chain_decomposition> build_chain_decomposition(
    const mader_sequence& seq, maintenance_stats* stats = nullptr,
    const std::function<void(std::size_t, const multigraph&, const chain_decomposition&)>& on_step = {}) {
    multigraph g = base_graph_of(seq);
    chain_decomposition d = base_decomposition(seq.root, seq.partner, seq.base_edges);
    for (std::size_t k = 0; k < seq.ops.size(); ++k) {
        apply_op(g, seq.ops[k]);
        try {
            if (const auto* add = std::get_if<add_edge_op>(&seq.ops[k]))
                d = maintain_add_edge(g, d, add->new_edge, stats);
            else
                d = maintain_pinch(g, d, std::get<pinch_op>(seq.ops[k]), stats);
            d = minimalize(d);
            if (auto rep = validate(g, d); !rep.ok())
                throw internal_error("minimalize broke the decomposition: " + rep.violations.front());
        } catch (internal_error& err) {
            throw internal_error("op " + std::to_string(k) + ": " + err.what());
        }
        if (on_step) on_step(k, g, d);
    }
    return {std::move(g), std::move(d)};
}

} // namespace eist
