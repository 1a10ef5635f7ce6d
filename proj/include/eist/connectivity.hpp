#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "eist/multigraph.hpp"

namespace eist {

// Result of a max-flow / connectivity query: the value together with a
// minimum cut achieving it.  Removing cut_edges disconnects the queried
// pair (or, for global queries, the graph).
struct cut_report {
    int value = 0;
    std::vector<int> cut_edges;
};

namespace detail {

// Flat copy of a multigraph used for repeated unit-capacity flow queries.
// Loops are dropped up front: they can never lie on an augmenting path or
// in a cut.  Vertices are compacted to 0..n-1; edge ids are kept alongside
// so cuts can be reported in the caller's id space.
class flow_network {
public:
    explicit flow_network(const multigraph& g) {
        for (int v : g.vertices()) {
            index_[v] = static_cast<int>(label_.size());
            label_.push_back(v);
        }
        int n = static_cast<int>(label_.size());
        adj_.assign(n, {});
        for (const auto& [e, uv] : g.edges()) {
            auto [u, v] = uv;
            if (u == v) continue;
            int a = index_.at(u), b = index_.at(v);
            int idx = static_cast<int>(edge_id_.size());
            edge_id_.push_back(e);
            tail_.push_back(a);
            head_.push_back(b);
            flow_.push_back(0);
            adj_[a].push_back(idx);
            adj_[b].push_back(idx);
        }
    }

    int compact(int v) const { return index_.at(v); }

    // Max number of edge-disjoint s-t paths, stopping once `limit` augmenting
    // paths are found.  Flows are left in place for cut extraction.
    int run(int s, int t, int limit = std::numeric_limits<int>::max()) {
        std::fill(flow_.begin(), flow_.end(), 0);
        int value = 0;
        while (value < limit && augment(s, t)) ++value;
        return value;
    }

    // Min-cut edges after run() has saturated the network (only valid when
    // run() stopped because no augmenting path remained).
    std::vector<int> min_cut(int s) const {
        std::vector<char> reach(adj_.size(), 0);
        residual_reach(s, reach);
        std::vector<int> cut;
        for (std::size_t i = 0; i < edge_id_.size(); ++i) {
            bool a = reach[tail_[i]], b = reach[head_[i]];
            if (a != b) cut.push_back(edge_id_[i]);
        }
        std::sort(cut.begin(), cut.end());
        return cut;
    }

private:
    // Residual capacity of traversing edge i out of vertex `from`:
    // free edges go either way, a saturated edge only backwards.
    bool can_use(int i, int from) const {
        if (flow_[i] == 0) return true;
        int sat_from = flow_[i] > 0 ? tail_[i] : head_[i];
        return sat_from != from;
    }

    bool augment(int s, int t) {
        std::vector<int> via(adj_.size(), -1); // edge used to reach vertex
        std::vector<int> queue{s};
        std::vector<char> seen(adj_.size(), 0);
        seen[s] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int w = queue[qi];
            if (w == t) break;
            for (int i : adj_[w]) {
                int u = tail_[i] == w ? head_[i] : tail_[i];
                if (seen[u] || !can_use(i, w)) continue;
                seen[u] = 1;
                via[u] = i;
                queue.push_back(u);
            }
        }
        if (!seen[t]) return false;
        // Walk back from t flipping edge states.
        int w = t;
        while (w != s) {
            int i = via[w];
            int prev = tail_[i] == w ? head_[i] : tail_[i];
            if (flow_[i] == 0)
                flow_[i] = prev == tail_[i] ? 1 : -1;
            else
                flow_[i] = 0; // cancelled
            w = prev;
        }
        return true;
    }

    void residual_reach(int s, std::vector<char>& reach) const {
        std::vector<int> stack{s};
        reach[s] = 1;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int i : adj_[w]) {
                int u = tail_[i] == w ? head_[i] : tail_[i];
                if (!reach[u] && can_use(i, w)) {
                    reach[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }

    std::map<int, int> index_;
    std::vector<int> label_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> edge_id_, tail_, head_;
    std::vector<signed char> flow_; // 0 free, +1 tail->head, -1 head->tail
};

} // namespace detail

// Maximum number of pairwise edge-disjoint s-t paths, with a witness
// minimum cut.  Loops are ignored.
inline cut_report max_flow(const multigraph& g, int s, int t) {
    if (s == t) throw std::invalid_argument("max_flow endpoints must differ");
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw std::invalid_argument("unknown vertex");
    detail::flow_network net(g);
    int cs = net.compact(s), ct = net.compact(t);
    cut_report r;
    r.value = net.run(cs, ct);
    r.cut_edges = net.min_cut(cs);
    return r;
}

inline bool has_flow_at_least(const multigraph& g, int s, int t, int k) {
    if (s == t) throw std::invalid_argument("flow endpoints must differ");
    detail::flow_network net(g);
    return net.run(net.compact(s), net.compact(t), k) >= k;
}

// Global edge connectivity via n-1 rooted flow queries; the witness comes
// from the minimising pair.
inline cut_report edge_connectivity(const multigraph& g) {
    auto vs = g.vertices();
    if (vs.size() < 2) throw std::invalid_argument("edge connectivity needs at least 2 vertices");
    detail::flow_network net(g);
    int s = net.compact(vs[0]);
    int best = std::numeric_limits<int>::max();
    int best_t = -1;
    for (std::size_t i = 1; i < vs.size(); ++i) {
        int t = net.compact(vs[i]);
        int v = net.run(s, t, best); // anything >= current best is irrelevant
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    cut_report r;
    net.run(s, best_t);
    r.value = best;
    r.cut_edges = net.min_cut(s);
    return r;
}

inline bool is_4_edge_connected(const multigraph& g) {
    auto vs = g.vertices();
    if (vs.size() < 2) throw std::invalid_argument("connectivity test needs at least 2 vertices");
    detail::flow_network net(g);
    int s = net.compact(vs[0]);
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (net.run(s, net.compact(vs[i]), 4) < 4) return false;
    return true;
}

} // namespace eist
