#pragma once

// Structural checkers shared by the unit tests and the acceptance suite.
// They re-verify, on concrete decompositions, the facts the tree
// construction relies on: prefix/suffix connectivity with the cut-edge
// shape, non-loop incidence, the degree-exactly-two indices, and the
// minimum degree bound.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "eist/chains.hpp"
#include "eist/multigraph.hpp"

namespace support {

struct invariant_report {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void fail(const std::string& s) { violations.push_back(s); }
};

// Union of chains [0, upto) as an edge set.
inline eist::edge_set prefix_edges(const eist::chain_decomposition& d, std::size_t upto) {
    eist::edge_set s;
    for (std::size_t i = 0; i < upto; ++i)
        for (int e : d.chains[i].edges) s.insert(e);
    return s;
}

// Bridges of the subgraph spanned by `edges` (per-component DFS lowpoint).
inline std::vector<int> bridges_of(const eist::multigraph& g, const eist::edge_set& edges) {
    std::map<int, std::vector<std::pair<int, int>>> adj;
    for (int e : edges) {
        auto [u, v] = g.ends(e);
        if (u == v) continue;
        adj[u].push_back({e, v});
        adj[v].push_back({e, u});
    }
    std::map<int, int> disc, low;
    std::vector<int> out;
    int timer = 0;
    // iterative dfs with parent edge
    for (const auto& [root, _] : adj) {
        if (disc.count(root)) continue;
        std::vector<std::tuple<int, int, std::size_t>> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, pe, idx] = stack.back();
            if (idx < adj[v].size()) {
                auto [e, u] = adj[v][idx++];
                if (e == pe) {
                    // skip one traversal of the tree edge; parallels differ by id
                    continue;
                }
                if (!disc.count(u)) {
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, e, 0});
                } else {
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                auto [v2, pe2, i2] = stack.back();
                stack.pop_back();
                if (!stack.empty()) {
                    auto& [p, ppe, pidx] = stack.back();
                    low[p] = std::min(low[p], low[v2]);
                    if (low[v2] > disc[p]) out.push_back(pe2);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Prefix/suffix connectivity and the cut-edge shape: every H_i and
// complement-prefix is connected, and a cut edge must induce a one-way
// chain with a bare single-vertex component on one side.
inline void check_prefix_connectivity(const eist::multigraph& g, const eist::chain_decomposition& d,
                                      invariant_report& rep, bool reversed_too = true) {
    std::size_t n = d.chains.size();
    for (std::size_t i = 1; i <= n; ++i) {
        eist::edge_set h = prefix_edges(d, i);
        auto comps = g.components(h);
        if (comps.size() > 1) rep.fail("prefix union of " + std::to_string(i) + " chains is disconnected");
        for (int b : bridges_of(g, h)) {
            if (d.chains[d.ci(b)].kind != eist::chain_kind::one_way)
                rep.fail("cut edge " + std::to_string(b) + " of a prefix is not a one-way chain");
            eist::edge_set h2 = h;
            h2.erase(b);
            // one side of the bridge must be a single vertex with no edges
            auto [u, v] = g.ends(b);
            bool u_bare = true, v_bare = true;
            for (int e : h2) {
                auto [a, bb] = g.ends(e);
                if (a == u || bb == u) u_bare = false;
                if (a == v || bb == v) v_bare = false;
            }
            if (!u_bare && !v_bare)
                rep.fail("cut edge " + std::to_string(b) + " has no bare single-vertex side");
        }
    }
    if (reversed_too) check_prefix_connectivity(g, eist::reverse_decomposition(d), rep, false);
}

// Whenever a vertex != root appears in a prefix with positive degree it has
// a non-loop edge there, and degree >= 2 implies two distinct non-loop
// edges; same for suffixes via the reversed decomposition.
inline void check_nonloop_incidence(const eist::multigraph& g, const eist::chain_decomposition& d,
                                    invariant_report& rep, bool reversed_too = true) {
    std::size_t n = d.chains.size();
    std::map<int, int> deg, nonloop;
    for (std::size_t i = 0; i < n; ++i) {
        for (int e : d.chains[i].edges) {
            auto [u, v] = g.ends(e);
            if (u == v) {
                deg[u] += 2;
            } else {
                deg[u] += 1;
                deg[v] += 1;
                nonloop[u] += 1;
                nonloop[v] += 1;
            }
        }
        for (const auto& [v, dd] : deg) {
            if (v == d.root) continue;
            if (dd >= 1 && nonloop[v] < 1)
                rep.fail("vertex " + std::to_string(v) + " has loop-only incidence in a prefix");
            if (dd >= 2 && nonloop[v] < 2)
                rep.fail("vertex " + std::to_string(v) + " lacks two distinct non-loop prefix edges");
        }
    }
    if (reversed_too) check_nonloop_incidence(g, eist::reverse_decomposition(d), rep, false);
}

// On minimal decompositions every non-root vertex hits degree exactly two
// in some prefix and some suffix.
inline void check_degree_two_indices(const eist::multigraph& g, const eist::chain_decomposition& d,
                                     invariant_report& rep) {
    std::size_t n = d.chains.size();
    for (int pass = 0; pass < 2; ++pass) {
        const eist::chain_decomposition& dd = pass ? eist::reverse_decomposition(d) : d;
        std::map<int, int> deg;
        std::set<int> satisfied;
        for (std::size_t i = 0; i < n; ++i) {
            for (int e : dd.chains[i].edges) {
                auto [u, v] = g.ends(e);
                deg[u] += u == v ? 2 : 1;
                if (v != u) deg[v] += 1;
            }
            for (const auto& [v, x] : deg)
                if (x == 2) satisfied.insert(v);
        }
        for (int v : g.vertices())
            if (v != dd.root && !satisfied.count(v))
                rep.fail("vertex " + std::to_string(v) + " never has degree exactly two in a " +
                         (pass ? "suffix" : "prefix"));
    }
}

inline void check_min_degree(const eist::multigraph& g, const eist::chain_decomposition& d, invariant_report& rep) {
    for (int v : g.vertices())
        if (v != d.root && g.degree(v) < 4)
            rep.fail("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " < 4");
}

inline invariant_report check_structural_invariants(const eist::multigraph& g, const eist::chain_decomposition& d) {
    invariant_report rep;
    check_prefix_connectivity(g, d, rep);
    check_nonloop_incidence(g, d, rep);
    check_degree_two_indices(g, d, rep);
    check_min_degree(g, d, rep);
    return rep;
}

} // namespace support
