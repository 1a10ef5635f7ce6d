#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eist/chains.hpp"
#include "eist/errors.hpp"
#include "eist/multigraph.hpp"
#include "eist/numbering.hpp"

namespace eist {

// Four spanning trees given as parent-edge maps: parent[k][v] is the edge
// leading from v toward the root in tree k.  Trees 0/1 split each vertex's
// earliest-edge pair by forward value, trees 2/3 split the latest pair by
// reverse value.
struct tree_set {
    std::array<std::map<int, int>, 4> parent;
};

struct independence_violation {
    int vertex;
    int tree_a, tree_b; // equal when the problem is structural
    int shared_edge;    // -1 when the problem is structural
    std::string detail;
};

struct independence_report {
    std::vector<independence_violation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

// Root path of v in tree k as a list of edges; walks the parent maps only,
// so it works for any candidate tree, not just ones we built.
inline bool root_path(const multigraph& g, int root, const std::map<int, int>& parent, int v,
                      std::vector<int>& out, std::string& why) {
    out.clear();
    std::set<int> seen{v};
    int cur = v;
    while (cur != root) {
        auto it = parent.find(cur);
        if (it == parent.end()) {
            why = "vertex " + std::to_string(cur) + " has no parent edge";
            return false;
        }
        if (!g.has_edge(it->second)) {
            why = "parent edge " + std::to_string(it->second) + " is not in the graph";
            return false;
        }
        auto [a, b] = g.ends(it->second);
        if (a != cur && b != cur) {
            why = "parent edge " + std::to_string(it->second) + " is not incident to vertex " + std::to_string(cur);
            return false;
        }
        out.push_back(it->second);
        cur = a == cur ? b : a;
        if (!seen.insert(cur).second) {
            why = "parent walk revisits vertex " + std::to_string(cur);
            return false;
        }
    }
    return true;
}

} // namespace detail

// Assemble the four trees from the two numberings and check, vertex by
// vertex, the monotonicity their spanning property rests on: toward the
// root, trees 0/1 never increase in chain index while strictly
// decreasing/increasing in forward value, and trees 2/3 mirror this with
// chain index and reverse value.
inline tree_set build_trees(const multigraph& g, const chain_decomposition& d, const edge_numbering& fwd,
                            const edge_numbering& rev) {
    tree_set t;
    const int root = d.root;
    for (int v : g.vertices()) {
        if (v == root) continue;
        auto [e0, e1] = earliest_edges(g, d, v);
        if (fwd.at(e0) > fwd.at(e1)) std::swap(e0, e1);
        t.parent[0][v] = e0;
        t.parent[1][v] = e1;
        auto [e2, e3] = latest_edges(g, d, v);
        if (rev.at(e2) > rev.at(e3)) std::swap(e2, e3);
        t.parent[2][v] = e2;
        t.parent[3][v] = e3;
    }

    // Monotonicity along every parent step.
    for (int k = 0; k < 4; ++k) {
        bool forward_tree = k < 2;
        bool increasing = k == 1 || k == 3;
        const edge_numbering& num = forward_tree ? fwd : rev;
        for (const auto& [v, e] : t.parent[k]) {
            int next = g.other_end(e, v);
            if (next == root) continue;
            auto it = t.parent[k].find(next);
            if (it == t.parent[k].end())
                throw internal_error("tree " + std::to_string(k + 1) + ": vertex " + std::to_string(next) +
                                     " has no parent");
            int e2 = it->second;
            bool ci_ok = forward_tree ? d.ci(e2) <= d.ci(e) : d.ci(e2) >= d.ci(e);
            bool val_ok = increasing ? num.at(e2) > num.at(e) : num.at(e2) < num.at(e);
            if (!ci_ok || !val_ok)
                throw internal_error("tree " + std::to_string(k + 1) + ": path through vertex " + std::to_string(v) +
                                     " is not monotone");
        }
    }
    return t;
}

// Black-box certificate check: every parent map must be a spanning tree
// rooted at `root`, and for every vertex the root paths of any two trees
// must not share an edge.  Works purely off the parent maps and the graph.
inline independence_report verify_independence(const multigraph& g, int root, const tree_set& t) {
    independence_report rep;
    if (!g.has_vertex(root)) {
        rep.violations.push_back({root, 0, 0, -1, "root vertex not in graph"});
        return rep;
    }

    std::array<std::map<int, std::vector<int>>, 4> paths;
    for (int k = 0; k < 4; ++k) {
        bool spanning = true;
        for (int v : g.vertices()) {
            if (v == root) continue;
            std::vector<int> path;
            std::string why;
            if (!detail::root_path(g, root, t.parent[k], v, path, why)) {
                rep.violations.push_back({v, k, k, -1, "not a spanning tree: " + why});
                spanning = false;
                continue;
            }
            paths[k][v] = std::move(path);
        }
        // Extra parent entries for unknown vertices are bogus certificates.
        for (const auto& [v, e] : t.parent[k])
            if (!g.has_vertex(v)) {
                rep.violations.push_back({v, k, k, -1, "parent entry for unknown vertex"});
                spanning = false;
            }
        (void)spanning;
    }
    if (!rep.ok()) return rep;

    for (int v : g.vertices()) {
        if (v == root) continue;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                std::set<int> ea(paths[a][v].begin(), paths[a][v].end());
                for (int e : paths[b][v])
                    if (ea.count(e)) rep.violations.push_back({v, a, b, e, "shared edge on root paths"});
            }
    }
    return rep;
}

// The four tree paths from v back to the root; pairwise edge-disjoint when
// the trees verify.
inline std::array<std::vector<int>, 4> four_disjoint_paths(const multigraph& g, int root, const tree_set& t, int v) {
    std::array<std::vector<int>, 4> out;
    for (int k = 0; k < 4; ++k) {
        std::string why;
        if (!detail::root_path(g, root, t.parent[k], v, out[k], why))
            throw internal_error("tree " + std::to_string(k + 1) + ": " + why);
    }
    return out;
}

} // namespace eist
