#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace eist {

using edge_set = std::unordered_set<int>;

// Undirected multigraph with stable integer ids for vertices and edges.
// Loops and parallel edges are allowed; a loop contributes 2 to the degree
// of its vertex.  Ids are handed out by monotone counters and never reused,
// so chain decompositions and construction sequences can reference edges
// across arbitrary mutation histories.  Endpoints keep the order they were
// given at creation (semantically the pair is unordered).
class multigraph {
public:
    int add_vertex() {
        int v = next_vertex_++;
        incidence_.emplace(v, std::vector<int>{});
        return v;
    }

    // Insert a vertex with a pinned id (used when replaying a recorded
    // construction).  The id must be free.
    void add_vertex_with_id(int v) {
        if (v < 0) throw std::invalid_argument("negative vertex id");
        if (incidence_.count(v)) throw std::invalid_argument("vertex id " + std::to_string(v) + " already in use");
        incidence_.emplace(v, std::vector<int>{});
        next_vertex_ = std::max(next_vertex_, v + 1);
    }

    int add_edge(int u, int v) {
        int e = next_edge_;
        add_edge_with_id(e, u, v);
        return e;
    }

    void add_edge_with_id(int e, int u, int v) {
        if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("missing endpoint");
        if (e < 0) throw std::invalid_argument("negative edge id");
        if (edges_.count(e)) throw std::invalid_argument("edge id " + std::to_string(e) + " already in use");
        if (u > v) std::swap(u, v); // endpoints are stored normalized
        edges_.emplace(e, std::pair{u, v});
        incidence_[u].push_back(e);
        if (v != u) incidence_[v].push_back(e);
        next_edge_ = std::max(next_edge_, e + 1);
    }

    void delete_edge(int e) {
        auto it = edges_.find(e);
        if (it == edges_.end()) throw std::invalid_argument("unknown edge " + std::to_string(e));
        auto [u, v] = it->second;
        detach(u, e);
        if (v != u) detach(v, e);
        edges_.erase(it);
    }

    // Drops a vertex that no edge touches anymore (splitting off a vertex
    // leaves one behind).  The id is retired, not recycled.
    void prune_isolated(int v) {
        auto it = incidence_.find(v);
        if (it == incidence_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        if (!it->second.empty()) throw std::invalid_argument("vertex " + std::to_string(v) + " is not isolated");
        incidence_.erase(it);
    }

    bool has_vertex(int v) const { return incidence_.count(v) != 0; }
    bool has_edge(int e) const { return edges_.count(e) != 0; }

    std::pair<int, int> ends(int e) const {
        auto it = edges_.find(e);
        if (it == edges_.end()) throw std::invalid_argument("unknown edge " + std::to_string(e));
        return it->second;
    }

    bool is_loop(int e) const {
        auto [u, v] = ends(e);
        return u == v;
    }

    int other_end(int e, int v) const {
        auto [a, b] = ends(e);
        if (a == v) return b;
        if (b == v) return a;
        throw std::invalid_argument("edge " + std::to_string(e) + " not incident to vertex " + std::to_string(v));
    }

    // Incidence list of v; a loop appears once (it still counts twice for
    // degree purposes).
    const std::vector<int>& incident_edges(int v) const {
        auto it = incidence_.find(v);
        if (it == incidence_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        return it->second;
    }

    int degree(int v) const {
        int d = 0;
        for (int e : incident_edges(v)) d += is_loop(e) ? 2 : 1;
        return d;
    }

    int nonloop_degree(int v) const {
        int d = 0;
        for (int e : incident_edges(v))
            if (!is_loop(e)) ++d;
        return d;
    }

    // Incidences of v with edges of s, counting loops twice.  O(deg v).
    int degree_in(int v, const edge_set& s) const {
        int d = 0;
        for (int e : incident_edges(v))
            if (s.count(e)) d += is_loop(e) ? 2 : 1;
        return d;
    }

    int vertex_count() const { return static_cast<int>(incidence_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(incidence_.size());
        for (const auto& [v, _] : incidence_) out.push_back(v);
        return out;
    }

    std::vector<int> edge_ids() const {
        std::vector<int> out;
        out.reserve(edges_.size());
        for (const auto& [e, _] : edges_) out.push_back(e);
        return out;
    }

    const std::map<int, std::pair<int, int>>& edges() const { return edges_; }

    // Connected components of the subgraph spanned by the edge set s.  Only
    // vertices touched by an edge of s appear.  Components and their members
    // come out sorted, so the partition is deterministic.
    std::vector<std::vector<int>> components(const edge_set& s) const {
        std::map<int, std::vector<std::pair<int, int>>> adj; // v -> (edge, other end)
        for (int e : s) {
            auto [u, v] = ends(e);
            adj[u].emplace_back(e, v);
            if (v != u) adj[v].emplace_back(e, u);
        }
        std::vector<std::vector<int>> out;
        std::unordered_set<int> seen;
        for (const auto& [start, _] : adj) {
            if (seen.count(start)) continue;
            std::vector<int> comp, stack{start};
            seen.insert(start);
            while (!stack.empty()) {
                int w = stack.back();
                stack.pop_back();
                comp.push_back(w);
                for (auto [e, u] : adj[w])
                    if (!seen.count(u)) {
                        seen.insert(u);
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Same ids, same (unordered) endpoint pairs.
    bool operator==(const multigraph& other) const {
        if (vertices() != other.vertices() || edges_.size() != other.edges_.size()) return false;
        for (const auto& [e, uv] : edges_) {
            auto it = other.edges_.find(e);
            if (it == other.edges_.end()) return false;
            auto [a, b] = uv;
            auto [c, d] = it->second;
            if (std::minmax(a, b) != std::minmax(c, d)) return false;
        }
        return true;
    }

private:
    void detach(int v, int e) {
        auto& list = incidence_[v];
        list.erase(std::find(list.begin(), list.end(), e));
    }

    std::map<int, std::pair<int, int>> edges_;
    std::map<int, std::vector<int>> incidence_;
    int next_vertex_ = 0;
    int next_edge_ = 0;
};

} // namespace eist
