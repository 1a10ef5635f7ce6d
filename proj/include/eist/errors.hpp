#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eist {

// Invariant that the algorithms guarantee internally was violated.  Seeing
// this exception means a bug, not bad input; the message names the stage
// (claim / op index) so the failure can be reproduced.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Input graph is not 4-edge-connected; carries a witness cut of size < 4
// whose removal disconnects the graph.
struct not_four_edge_connected : std::runtime_error {
    std::vector<int> witness_cut;

    explicit not_four_edge_connected(std::vector<int> cut)
        : std::runtime_error("graph is not 4-edge-connected (cut of size " +
                             std::to_string(cut.size()) + " found)"),
          witness_cut(std::move(cut)) {}
};

struct parse_error : std::runtime_error {
    int line;

    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace eist
