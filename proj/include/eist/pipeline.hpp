#pragma once

#include <functional>
#include <utility>

#include "eist/chains.hpp"
#include "eist/connectivity.hpp"
#include "eist/mader.hpp"
#include "eist/maintenance.hpp"
#include "eist/multigraph.hpp"
#include "eist/numbering.hpp"
#include "eist/trees.hpp"

namespace eist {

// Everything the full run produces, kept around so callers (CLI, tests) can
// dump or cross-check any stage.
struct pipeline_result {
    mader_sequence sequence;
    multigraph graph;              // replayed; equals the input
    chain_decomposition decomposition;
    multigraph stripped;           // loopless graph the trees span
    chain_decomposition stripped_decomposition;
    edge_numbering forward;        // up + one-way chain values ("f")
    edge_numbering reverse;        // down + one-way chain values ("g")
    tree_set trees;
    independence_report report;
    maintenance_stats stats;
};

// Input graph with root -> four edge-independent spanning trees, with every
// intermediate certificate validated along the way.  Throws
// not_four_edge_connected (with witness cut) on unsuitable input and
// internal_error if any stage breaks its own invariant.
inline pipeline_result run_pipeline(
    const multigraph& g, int root,
    const std::function<void(std::size_t, const multigraph&, const chain_decomposition&)>& on_step = {}) {
    pipeline_result r;
    r.sequence = extract_sequence(g, root);
    std::tie(r.graph, r.decomposition) = build_chain_decomposition(r.sequence, &r.stats, on_step);
    if (!(r.graph == g)) throw internal_error("replayed construction does not reproduce the input graph");
    std::tie(r.stripped, r.stripped_decomposition) = strip_loops(r.graph, r.decomposition);
    r.forward = compute_forward_numbering(r.stripped, r.stripped_decomposition);
    r.reverse = compute_reverse_numbering(r.stripped, r.stripped_decomposition);
    r.trees = build_trees(r.stripped, r.stripped_decomposition, r.forward, r.reverse);
    r.report = verify_independence(r.stripped, root, r.trees);
    return r;
}

} // namespace eist
