#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eist/chains.hpp"
#include "eist/errors.hpp"
#include "eist/mader.hpp"
#include "eist/multigraph.hpp"
#include "eist/numbering.hpp"
#include "eist/trees.hpp"

namespace eist {

// ---- edge list files ------------------------------------------------------
//
// Header `n m r`, then m lines `u v`.  Vertices are 0..n-1 and edges get
// ids 0..m-1 in file order; duplicate lines are parallel edges, u == v is a
// loop.

struct edge_list_file {
    multigraph graph;
    int root = 0;
};

inline edge_list_file parse_edge_list(std::istream& in) {
    edge_list_file out;
    std::string line;
    int lineno = 0;

    auto next_line = [&](std::string& dst) {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            dst = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw parse_error(lineno, "missing header");
    long long n, m, r;
    {
        std::istringstream ss(header);
        std::string extra;
        if (!(ss >> n >> m >> r) || (ss >> extra)) throw parse_error(lineno, "header must be `n m r`");
    }
    if (n < 1 || m < 0) throw parse_error(lineno, "header counts out of range");
    if (r < 0 || r >= n) throw parse_error(lineno, "root out of range");
    for (long long i = 0; i < n; ++i) out.graph.add_vertex();
    out.root = static_cast<int>(r);

    for (long long i = 0; i < m; ++i) {
        std::string edge_line;
        if (!next_line(edge_line)) throw parse_error(lineno, "expected " + std::to_string(m) + " edge lines");
        std::istringstream ss(edge_line);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra)) throw parse_error(lineno, "edge line must be `u v`");
        if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error(lineno, "endpoint out of range");
        out.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string trailing;
    if (next_line(trailing)) throw parse_error(lineno, "trailing content after edge list");
    return out;
}

inline void write_edge_list(std::ostream& os, const multigraph& g, int root) {
    os << g.vertex_count() << ' ' << g.edge_count() << ' ' << root << '\n';
    for (const auto& [e, uv] : g.edges()) os << uv.first << ' ' << uv.second << '\n';
}

// ---- construction sequences ------------------------------------------------
//
// `base root partner e0 e1 e2 e3`, then one op per line:
// `add u v -> e` or `pinch e1 e2 -> v ex ey ez ew`.

inline void write_sequence(std::ostream& os, const mader_sequence& seq) {
    os << "base " << seq.root << ' ' << seq.partner;
    for (int e : seq.base_edges) os << ' ' << e;
    os << '\n';
    for (const auto& op : seq.ops) {
        if (const auto* add = std::get_if<add_edge_op>(&op))
            os << "add " << add->u << ' ' << add->v << " -> " << add->new_edge << '\n';
        else {
            const auto& p = std::get<pinch_op>(op);
            os << "pinch " << p.e1 << ' ' << p.e2 << " -> " << p.new_vertex << ' ' << p.ex << ' ' << p.ey << ' '
               << p.ez << ' ' << p.ew << '\n';
        }
    }
}

inline mader_sequence parse_sequence(std::istream& in) {
    mader_sequence seq;
    std::string word, arrow;
    int lineno = 1;
    if (!(in >> word) || word != "base") throw parse_error(lineno, "sequence must start with `base`");
    if (!(in >> seq.root >> seq.partner >> seq.base_edges[0] >> seq.base_edges[1] >> seq.base_edges[2] >>
          seq.base_edges[3]))
        throw parse_error(lineno, "malformed base line");
    while (in >> word) {
        ++lineno;
        if (word == "add") {
            add_edge_op op{};
            if (!(in >> op.u >> op.v >> arrow >> op.new_edge) || arrow != "->")
                throw parse_error(lineno, "malformed add op");
            seq.ops.emplace_back(op);
        } else if (word == "pinch") {
            pinch_op op{};
            if (!(in >> op.e1 >> op.e2 >> arrow >> op.new_vertex >> op.ex >> op.ey >> op.ez >> op.ew) || arrow != "->")
                throw parse_error(lineno, "malformed pinch op");
            seq.ops.emplace_back(op);
        } else {
            throw parse_error(lineno, "unknown op `" + word + "`");
        }
    }
    return seq;
}

// ---- chain decompositions ---------------------------------------------------
//
// One chain per line: `<idx> up|down|oneway edges=<id,...>` followed by the
// shape: `open a b`, `closed v`, or `arc tail head`.

inline void write_decomposition(std::ostream& os, const chain_decomposition& d) {
    for (std::size_t i = 0; i < d.chains.size(); ++i) {
        const chain& c = d.chains[i];
        os << i << ' ' << kind_name(c.kind) << " edges=";
        for (std::size_t k = 0; k < c.edges.size(); ++k) os << (k ? "," : "") << c.edges[k];
        if (c.kind == chain_kind::one_way)
            os << " arc " << c.tail() << ' ' << c.head();
        else if (c.is_closed())
            os << " closed " << c.tail();
        else
            os << " open " << c.tail() << ' ' << c.head();
        os << '\n';
    }
}

// ---- trees -------------------------------------------------------------------
//
// Four blocks `tree k:` with one `v parent_edge=<id>` line per non-root
// vertex, in vertex order.

inline void write_trees(std::ostream& os, const tree_set& t) {
    for (int k = 0; k < 4; ++k) {
        os << "tree " << k + 1 << ":\n";
        for (const auto& [v, e] : t.parent[k]) os << v << " parent_edge=" << e << '\n';
    }
}

inline tree_set parse_trees(std::istream& in) {
    tree_set t;
    std::string line;
    int lineno = 0, k = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        std::string first;
        ss >> first;
        if (first == "tree") {
            int idx;
            std::string colon;
            ss >> idx;
            if (!ss || idx < 1 || idx > 4) throw parse_error(lineno, "tree index must be 1..4");
            k = idx - 1;
            continue;
        }
        if (k < 0) throw parse_error(lineno, "parent line before any `tree k:` header");
        int v;
        std::string kv;
        {
            std::istringstream ss2(line);
            if (!(ss2 >> v >> kv) || kv.rfind("parent_edge=", 0) != 0)
                throw parse_error(lineno, "expected `v parent_edge=<id>`");
        }
        try {
            t.parent[k][v] = std::stoi(kv.substr(12));
        } catch (const std::exception&) {
            throw parse_error(lineno, "bad edge id in `" + kv + "`");
        }
    }
    return t;
}

// ---- numbering dump ------------------------------------------------------------

inline void write_numbering(std::ostream& os, const edge_numbering& num, const char* name) {
    for (const auto& [e, val] : num.values)
        os << "edge " << e << ' ' << name << '=' << numerator(val) << '/' << denominator(val) << '\n';
}

// ---- DOT export -----------------------------------------------------------------
//
// Edges are colored by tree membership (an edge can serve several trees;
// graphviz takes a color list).  One-way chains keep their direction as an
// arrowhead from tail to head.

inline void write_dot(std::ostream& os, const multigraph& g, int root, const chain_decomposition& d,
                      const tree_set& t) {
    static const char* palette[4] = {"red", "blue", "forestgreen", "orange"};
    os << "graph eist {\n";
    for (int v : g.vertices()) {
        os << "  " << v;
        if (v == root) os << " [shape=doublecircle,label=\"" << v << " (root)\"]";
        os << ";\n";
    }
    for (const auto& [e, uv] : g.edges()) {
        std::string colors;
        for (int k = 0; k < 4; ++k) {
            bool used = false;
            for (const auto& [v, pe] : t.parent[k]) used = used || pe == e;
            if (used) {
                if (!colors.empty()) colors += ':';
                colors += palette[k];
            }
        }
        int a = uv.first, b = uv.second;
        bool one_way = false;
        if (d.chain_index.count(e)) {
            const chain& c = d.chains[d.ci(e)];
            if (c.kind == chain_kind::one_way) {
                one_way = true;
                a = c.tail();
                b = c.head();
            }
        }
        os << "  " << a << " -- " << b << " [label=\"" << e << "\"";
        os << ",color=\"" << (colors.empty() ? "gray" : colors) << "\"";
        if (one_way) os << ",dir=forward";
        os << "];\n";
    }
    os << "}\n";
}

} // namespace eist
