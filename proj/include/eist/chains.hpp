#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "eist/errors.hpp"
#include "eist/multigraph.hpp"

namespace eist {

enum class chain_kind { up, down, one_way };

inline const char* kind_name(chain_kind k) {
    switch (k) {
    case chain_kind::up: return "up";
    case chain_kind::down: return "down";
    default: return "oneway";
    }
}

// One chain: a walk of edges together with its induced vertex walk.
// vertices.size() == edges.size() + 1 always.  Up/down chains are paths
// (open, distinct end vertices) or cycles (closed, vertices.front() ==
// vertices.back(), that vertex being the single end).  A one-way chain is a
// single edge, walked tail -> head.  A loop makes a cycle of length one.
struct chain {
    chain_kind kind;
    std::vector<int> edges;
    std::vector<int> vertices;

    bool is_closed() const { return kind != chain_kind::one_way && vertices.front() == vertices.back(); }
    int tail() const { return vertices.front(); }
    int head() const { return vertices.back(); }

    bool operator==(const chain&) const = default;
};

inline chain make_one_way(int edge, int tail, int head) {
    return chain{chain_kind::one_way, {edge}, {tail, head}};
}

// Ordered list of chains partitioning the edge set of a graph.  chain_index
// maps each edge to the position of its chain (the map is derived data,
// rebuilt after every structural change).
struct chain_decomposition {
    int root = 0;
    std::vector<chain> chains;
    std::unordered_map<int, int> chain_index;

    void rebuild_index() {
        chain_index.clear();
        for (std::size_t i = 0; i < chains.size(); ++i)
            for (int e : chains[i].edges) chain_index[e] = static_cast<int>(i);
    }

    int ci(int edge) const {
        auto it = chain_index.find(edge);
        if (it == chain_index.end()) throw internal_error("edge " + std::to_string(edge) + " not in any chain");
        return it->second;
    }
};

struct validation_report {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

// Per-vertex degree contributed by one chain (loops count twice).
inline std::map<int, int> chain_degrees(const multigraph& g, const chain& c) {
    std::map<int, int> deg;
    for (int e : c.edges) {
        auto [u, v] = g.ends(e);
        deg[u] += u == v ? 2 : 1;
        if (v != u) deg[v] += 1;
    }
    return deg;
}

inline bool walk_is_consistent(const multigraph& g, const chain& c, std::string& why) {
    if (c.edges.empty()) {
        why = "chain has no edges";
        return false;
    }
    if (c.vertices.size() != c.edges.size() + 1) {
        why = "vertex walk length does not match edge count";
        return false;
    }
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        if (!g.has_edge(c.edges[k])) {
            why = "edge " + std::to_string(c.edges[k]) + " not in graph";
            return false;
        }
        auto [u, v] = g.ends(c.edges[k]);
        int a = c.vertices[k], b = c.vertices[k + 1];
        if (!((u == a && v == b) || (u == b && v == a))) {
            why = "edge " + std::to_string(c.edges[k]) + " does not join walk vertices";
            return false;
        }
    }
    std::set<int> uniq(c.edges.begin(), c.edges.end());
    if (uniq.size() != c.edges.size()) {
        why = "repeated edge in chain";
        return false;
    }
    if (c.kind == chain_kind::one_way) {
        if (c.edges.size() != 1) {
            why = "one-way chain must be a single edge";
            return false;
        }
        return true;
    }
    // Simplicity: open chains repeat no vertex, closed chains only repeat
    // the common end at the two extremes.
    std::vector<int> vs = c.vertices;
    if (vs.front() == vs.back()) vs.pop_back();
    std::set<int> uv(vs.begin(), vs.end());
    if (uv.size() != vs.size()) {
        why = "walk repeats a vertex";
        return false;
    }
    return true;
}

} // namespace detail

// Check the chain decomposition definition: the chains partition E(G) and
// each chain satisfies its kind's degree conditions relative to the union
// of earlier chains (H) and later chains (Hbar).  Violations are returned
// as data, one line each.
inline validation_report validate(const multigraph& g, const chain_decomposition& d) {
    validation_report rep;
    auto fail = [&rep](std::size_t i, const std::string& msg) {
        rep.violations.push_back("chain " + std::to_string(i) + ": " + msg);
    };

    if (g.vertex_count() > 0 && !g.has_vertex(d.root)) {
        rep.violations.push_back("root " + std::to_string(d.root) + " not in graph");
        return rep;
    }

    // Partition check.
    std::unordered_map<int, int> owner;
    for (std::size_t i = 0; i < d.chains.size(); ++i)
        for (int e : d.chains[i].edges) {
            if (owner.count(e)) fail(i, "edge " + std::to_string(e) + " already in chain " + std::to_string(owner[e]));
            owner[e] = static_cast<int>(i);
        }
    for (const auto& [e, _] : g.edges())
        if (!owner.count(e)) rep.violations.push_back("edge " + std::to_string(e) + " not covered by any chain");
    for (const auto& [e, i] : d.chain_index)
        if (!owner.count(e) || owner[e] != i)
            rep.violations.push_back("chain_index inconsistent for edge " + std::to_string(e));
    if (d.chain_index.size() != owner.size())
        rep.violations.push_back("chain_index does not cover every chain edge");

    // Structural checks per chain.
    std::vector<bool> walk_ok(d.chains.size(), true);
    for (std::size_t i = 0; i < d.chains.size(); ++i) {
        std::string why;
        if (!detail::walk_is_consistent(g, d.chains[i], why)) {
            fail(i, why);
            walk_ok[i] = false;
        }
    }

    // Degree conditions, one prefix sweep.  deg_before accumulates chains
    // < i; degree in later chains is total - before - in-chain.
    std::map<int, int> total;
    for (int v : g.vertices()) total[v] = g.degree(v);
    std::map<int, int> before;
    auto deg_before = [&before](int v) {
        auto it = before.find(v);
        return it == before.end() ? 0 : it->second;
    };

    int root = d.root;
    for (std::size_t i = 0; i < d.chains.size(); ++i) {
        const chain& c = d.chains[i];
        if (!walk_ok[i]) continue;
        auto in_chain = detail::chain_degrees(g, c);
        auto deg_after = [&](int v) { return total[v] - deg_before(v) - in_chain[v]; };

        if (c.kind == chain_kind::one_way) {
            if (c.tail() != root && deg_before(c.tail()) < 2)
                fail(i, "one-way tail " + std::to_string(c.tail()) + " needs degree >= 2 in earlier chains");
            if (c.head() != root && deg_after(c.head()) < 2)
                fail(i, "one-way head " + std::to_string(c.head()) + " needs degree >= 2 in later chains");
        } else {
            bool up = c.kind == chain_kind::up;
            // Every vertex: root or degree >= 2 on the chain's "open" side.
            std::vector<int> vs = c.vertices;
            if (c.is_closed()) vs.pop_back();
            for (int v : vs) {
                int side = up ? deg_after(v) : deg_before(v);
                if (v != root && side < 2)
                    fail(i, std::string(kind_name(c.kind)) + " chain vertex " + std::to_string(v) +
                                " needs degree >= 2 in " + (up ? "later" : "earlier") + " chains");
            }
            if (c.is_closed()) {
                int v = c.tail();
                int anchor = up ? deg_before(v) : deg_after(v);
                if (v != root && anchor < 2)
                    fail(i, std::string("closed ") + kind_name(c.kind) + " chain end " + std::to_string(v) +
                                " needs degree >= 2 in " + (up ? "earlier" : "later") + " chains");
            } else {
                for (int v : {c.tail(), c.head()}) {
                    int anchor = up ? deg_before(v) : deg_after(v);
                    if (v != root && anchor < 1)
                        fail(i, std::string("open ") + kind_name(c.kind) + " chain end " + std::to_string(v) +
                                    " must lie in " + (up ? "earlier" : "later") + " chains");
                }
            }
        }

        for (const auto& [v, dd] : in_chain) before[v] += dd;
    }
    return rep;
}

inline chain flip_chain(chain c) {
    if (c.kind == chain_kind::one_way) {
        std::reverse(c.vertices.begin(), c.vertices.end());
    } else {
        c.kind = c.kind == chain_kind::up ? chain_kind::down : chain_kind::up;
    }
    return c;
}

// The symmetric decomposition: reversed chain order, up and down chains
// switched, one-way tails and heads switched.
inline chain_decomposition reverse_decomposition(const chain_decomposition& d) {
    chain_decomposition out;
    out.root = d.root;
    out.chains.reserve(d.chains.size());
    for (auto it = d.chains.rbegin(); it != d.chains.rend(); ++it) out.chains.push_back(flip_chain(*it));
    out.rebuild_index();
    return out;
}

namespace detail {

inline void orient_canonically(chain& c) {
    if (c.kind == chain_kind::one_way || c.edges.size() < 2) return;
    bool rev;
    if (c.is_closed())
        rev = c.edges.back() < c.edges.front();
    else
        rev = c.vertices.back() < c.vertices.front();
    if (rev) {
        std::reverse(c.edges.begin(), c.edges.end());
        std::reverse(c.vertices.begin(), c.vertices.end());
    }
}

// Break a chain at the given internal walk positions; pieces keep the kind
// and come out in walk order.
inline std::vector<chain> split_at(const chain& c, const std::vector<std::size_t>& cuts) {
    std::vector<chain> out;
    std::size_t start = 0;
    auto emit = [&](std::size_t from, std::size_t to) {
        chain piece;
        piece.kind = c.kind;
        piece.edges.assign(c.edges.begin() + from, c.edges.begin() + to);
        piece.vertices.assign(c.vertices.begin() + from, c.vertices.begin() + to + 1);
        out.push_back(std::move(piece));
    };
    for (std::size_t p : cuts) {
        emit(start, p);
        start = p;
    }
    emit(start, c.edges.size());
    return out;
}

} // namespace detail

// Subdivide every non-minimal up/down chain at its offending internal
// vertices (an up chain may not pass through the root or any vertex of an
// earlier chain; down chains mirror this).  Pieces are inserted
// consecutively at the old chain's index, in walk order from the canonical
// end; the block's edge set is unchanged, so no other chain is affected.
inline chain_decomposition minimalize(const chain_decomposition& d) {
    std::size_t n = d.chains.size();

    // Vertex sets of the strict prefix / suffix unions.
    std::vector<std::unordered_set<int>> forbidden(n);
    {
        std::unordered_set<int> seen{d.root};
        for (std::size_t i = 0; i < n; ++i) {
            if (d.chains[i].kind == chain_kind::up) forbidden[i] = seen;
            for (int v : d.chains[i].vertices) seen.insert(v);
        }
    }
    {
        std::unordered_set<int> seen{d.root};
        for (std::size_t i = n; i-- > 0;) {
            if (d.chains[i].kind == chain_kind::down) forbidden[i] = seen;
            for (int v : d.chains[i].vertices) seen.insert(v);
        }
    }

    chain_decomposition out;
    out.root = d.root;
    for (std::size_t i = 0; i < n; ++i) {
        const chain& c = d.chains[i];
        if (c.kind == chain_kind::one_way) {
            out.chains.push_back(c);
            continue;
        }
        bool offends = false;
        for (std::size_t k = 1; k + 1 < c.vertices.size(); ++k)
            if (forbidden[i].count(c.vertices[k])) offends = true;
        if (!offends) {
            out.chains.push_back(c);
            continue;
        }
        chain oriented = c;
        detail::orient_canonically(oriented);
        std::vector<std::size_t> cuts;
        for (std::size_t k = 1; k + 1 < oriented.vertices.size(); ++k)
            if (forbidden[i].count(oriented.vertices[k])) cuts.push_back(k);
        for (chain& piece : detail::split_at(oriented, cuts)) out.chains.push_back(std::move(piece));
    }
    out.rebuild_index();
    return out;
}

inline bool is_minimal(const chain_decomposition& d) {
    std::size_t n = d.chains.size();
    std::unordered_set<int> seen{d.root};
    auto offending = [&](const chain& c, const std::unordered_set<int>& bad) {
        for (std::size_t k = 1; k + 1 < c.vertices.size(); ++k)
            if (bad.count(c.vertices[k])) return true;
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (d.chains[i].kind == chain_kind::up && offending(d.chains[i], seen)) return false;
        for (int v : d.chains[i].vertices) seen.insert(v);
    }
    seen = {d.root};
    for (std::size_t i = n; i-- > 0;) {
        if (d.chains[i].kind == chain_kind::down && offending(d.chains[i], seen)) return false;
        for (int v : d.chains[i].vertices) seen.insert(v);
    }
    return true;
}

// Decomposition of the 4-parallel-edge base graph: two of the edges form a
// closed up chain ending at the root, the other two a closed down chain.
inline chain_decomposition base_decomposition(int root, int partner, const std::array<int, 4>& base_edges) {
    chain_decomposition d;
    d.root = root;
    d.chains.push_back(chain{chain_kind::up, {base_edges[0], base_edges[1]}, {root, partner, root}});
    d.chains.push_back(chain{chain_kind::down, {base_edges[2], base_edges[3]}, {root, partner, root}});
    d.rebuild_index();
    return d;
}

} // namespace eist
