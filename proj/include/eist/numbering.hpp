#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eist/chains.hpp"
#include "eist/errors.hpp"
#include "eist/multigraph.hpp"

namespace eist {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

// Partial map edge -> value.  All assigned values are pairwise distinct;
// exact arithmetic keeps the strict comparisons the trees depend on free of
// ties.
struct edge_numbering {
    std::map<int, rational> values;

    bool has(int e) const { return values.count(e) != 0; }
    const rational& at(int e) const {
        auto it = values.find(e);
        if (it == values.end()) throw internal_error("edge " + std::to_string(e) + " has no numbering value");
        return it->second;
    }
};

// Remove every loop together with its (single-edge) chain.  Loops never
// carry degree conditions for anyone else, so the rest of the decomposition
// is untouched and stays minimal.
inline std::pair<multigraph, chain_decomposition> strip_loops(const multigraph& g, const chain_decomposition& d) {
    multigraph h = g;
    chain_decomposition out;
    out.root = d.root;
    for (const chain& c : d.chains) {
        if (c.edges.size() == 1 && g.is_loop(c.edges[0]))
            h.delete_edge(c.edges[0]);
        else
            out.chains.push_back(c);
    }
    out.rebuild_index();
    if (auto rep = validate(h, out); !rep.ok())
        throw internal_error("loop stripping broke the decomposition: " + rep.violations.front());
    for (int v : h.vertices())
        if (h.incident_edges(v).empty()) throw internal_error("loop stripping isolated vertex " + std::to_string(v));
    return {std::move(h), std::move(out)};
}

namespace detail {

inline std::vector<std::pair<int, int>> incident_by_chain(const multigraph& g, const chain_decomposition& d, int v) {
    std::vector<std::pair<int, int>> inc; // (chain index, edge)
    for (int e : g.incident_edges(v)) {
        if (g.is_loop(e)) throw internal_error("incident loop survives in a stripped graph");
        inc.emplace_back(d.ci(e), e);
    }
    std::sort(inc.begin(), inc.end());
    return inc;
}

} // namespace detail

// The two incident edges of v with the lowest chain index.  On a minimal
// loopless decomposition every other incident edge has a strictly larger
// index; that separation is what makes the pair well-defined, so it is
// checked here.
inline std::pair<int, int> earliest_edges(const multigraph& g, const chain_decomposition& d, int v) {
    if (v == d.root) throw std::invalid_argument("the root has no earliest-edge pair");
    auto inc = detail::incident_by_chain(g, d, v);
    if (inc.size() < 2) throw internal_error("vertex " + std::to_string(v) + " has fewer than two incident edges");
    if (inc.size() > 2 && inc[1].first >= inc[2].first)
        throw internal_error("earliest-edge pair of vertex " + std::to_string(v) + " is not separated by chain index");
    return {inc[0].second, inc[1].second};
}

// Mirror of earliest_edges: the two incident edges with the highest chain
// index (the earliest edges of the reversed decomposition).
inline std::pair<int, int> latest_edges(const multigraph& g, const chain_decomposition& d, int v) {
    if (v == d.root) throw std::invalid_argument("the root has no latest-edge pair");
    auto inc = detail::incident_by_chain(g, d, v);
    std::size_t n = inc.size();
    if (n < 2) throw internal_error("vertex " + std::to_string(v) + " has fewer than two incident edges");
    if (n > 2 && inc[n - 2].first <= inc[n - 3].first)
        throw internal_error("latest-edge pair of vertex " + std::to_string(v) + " is not separated by chain index");
    return {inc[n - 2].second, inc[n - 1].second};
}

namespace detail {

// Allocator of distinct rational values.  "Fresh" and "above a" requests
// hand out unused integers; "between" requests subdivide the interval at
// power-of-two granularity (the midpoint first), refining until the values
// are unused.  Keeping every denominator a power of two stops the exact
// arithmetic from compounding across chains.
class value_pool {
public:
    bool used(const rational& r) const { return used_.count(r) != 0; }

    std::vector<rational> fresh_integers(std::size_t k) {
        rational above = used_.empty() ? rational(-1) : *used_.rbegin();
        return integers_above(above, k);
    }

    std::vector<rational> integers_above(const rational& a, std::size_t k) {
        std::vector<rational> out;
        bigint n = floor_of(a) + 1;
        while (out.size() < k) {
            rational cand(n);
            if (!used(cand)) {
                used_.insert(cand);
                out.push_back(std::move(cand));
            }
            ++n;
        }
        return out;
    }

    std::vector<rational> between(const rational& a, const rational& b, std::size_t k) {
        if (!(a < b)) throw internal_error("between() needs a < b");
        bigint denom = 2;
        while (denom <= bigint(k)) denom *= 2;
        for (;; denom *= 2) {
            std::vector<rational> cand;
            bool clash = false;
            for (std::size_t s = 1; s <= k; ++s) {
                rational r = a + (b - a) * rational(bigint(s), denom);
                if (used(r)) {
                    clash = true;
                    break;
                }
                cand.push_back(std::move(r));
            }
            if (!clash) {
                for (const rational& r : cand) used_.insert(r);
                return cand;
            }
        }
    }

private:
    static bigint floor_of(const rational& r) {
        bigint q = numerator(r) / denominator(r);
        if (r < 0 && q * denominator(r) != numerator(r)) --q;
        return q;
    }

    std::set<rational> used_;
};

} // namespace detail

// Number the edges of every up chain and one-way chain, in chain order.
// Each chain is monotone, anchored between (or above) already-assigned
// values at its ends, exactly the discipline the tree paths rely on.  Down
// chain edges stay unassigned.
inline edge_numbering compute_forward_numbering(const multigraph& g, const chain_decomposition& d) {
    edge_numbering f;
    detail::value_pool pool;
    const int root = d.root;

    // The earliest pair of each non-root vertex, resolved once.
    std::map<int, std::pair<int, int>> earliest;
    for (int v : g.vertices())
        if (v != root) earliest[v] = earliest_edges(g, d, v);

    auto numbered_earliest = [&](int v) {
        std::vector<int> out;
        auto [a, b] = earliest.at(v);
        if (f.has(a)) out.push_back(a);
        if (f.has(b)) out.push_back(b);
        std::sort(out.begin(), out.end());
        return out;
    };

    for (std::size_t idx = 0; idx < d.chains.size(); ++idx) {
        const chain& c = d.chains[idx];
        if (c.kind == chain_kind::down) continue;

        if (c.kind == chain_kind::one_way) {
            rational val;
            if (c.tail() == root) {
                val = pool.fresh_integers(1)[0];
            } else {
                auto nb = numbered_earliest(c.tail());
                if (nb.size() != 2) throw internal_error("one-way tail lacks two numbered anchor edges");
                rational a = f.at(nb[0]), b = f.at(nb[1]);
                val = pool.between(std::min(a, b), std::max(a, b), 1)[0];
            }
            f.values[c.edges[0]] = val;
            continue;
        }

        // Up chain.  Pick a traversal direction and the anchor values, then
        // assign values ascending along the traversal.
        std::size_t k = c.edges.size();
        std::vector<int> order = c.edges;
        auto reversed_order = [&order]() { std::reverse(order.begin(), order.end()); };
        std::vector<rational> vals;

        bool has_root = std::find(c.vertices.begin(), c.vertices.end(), root) != c.vertices.end();
        if (c.is_closed() && has_root) {
            if (c.tail() != root) throw internal_error("closed chain through the root must end there");
            if (k >= 2 && c.edges.back() < c.edges.front()) reversed_order();
            vals = pool.fresh_integers(k);
        } else if (c.is_closed()) {
            auto nb = numbered_earliest(c.tail());
            if (nb.size() != 2) throw internal_error("closed chain end lacks two numbered anchor edges");
            rational a = f.at(nb[0]), b = f.at(nb[1]);
            if (k >= 2 && c.edges.back() < c.edges.front()) reversed_order();
            vals = pool.between(std::min(a, b), std::max(a, b), k);
        } else if (has_root) {
            if (c.tail() != root && c.head() != root) throw internal_error("root is internal to an open chain");
            int u = c.tail() == root ? c.head() : c.tail();
            auto nb = numbered_earliest(u);
            if (nb.empty()) throw internal_error("open chain end lacks a numbered anchor edge");
            rational a = f.at(nb[0]);
            for (int e : nb) a = std::min(a, f.at(e));
            if (c.tail() == root) reversed_order(); // ascend moving from u to the root
            vals = pool.integers_above(a, k);
        } else {
            int u = c.tail(), v2 = c.head();
            auto cu = numbered_earliest(u), cv = numbered_earliest(v2);
            int eu = -1, ev = -1;
            for (int a : cu) {
                for (int b : cv)
                    if (a != b) {
                        eu = a;
                        ev = b;
                        break;
                    }
                if (eu >= 0) break;
            }
            if (eu < 0) throw internal_error("open chain cannot find two distinct anchor edges");
            rational a = f.at(eu), b = f.at(ev);
            if (a > b) reversed_order(); // ascend from the lower-anchored end
            vals = pool.between(std::min(a, b), std::max(a, b), k);
        }

        for (std::size_t t = 0; t < k; ++t) f.values[order[t]] = vals[t];
    }
    return f;
}

// The mirrored numbering: the forward procedure run on the reversed
// decomposition (down chains and one-way chains get values).
inline edge_numbering compute_reverse_numbering(const multigraph& g, const chain_decomposition& d) {
    return compute_forward_numbering(g, reverse_decomposition(d));
}

} // namespace eist
