#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gainspec/core.hpp"
#include "gainspec/weighted.hpp"

namespace gainspec {

/// Result of parsing a gain graph file. `weights` is parallel to
/// graph.edges(), defaulting to 1 where no w= was given; `weighted` records
/// whether any weight appeared.
struct ParsedGraph {
    GainGraph graph;
    std::vector<double> weights;
    bool weighted = false;

    WeightedGainGraph weighted_graph() const { return WeightedGainGraph(graph, weights); }
};

/// Format: first significant line `gaingraph <n>`, then one edge per line,
/// `<u> <v> <gain> [w=<weight>]` with 1-based vertices. Gains are either
/// `pi:p/q` (exactly e^{i pi p/q}) or `<re>+<im>i` / `<re>-<im>i` literals,
/// which are normalized and rejected when | |z| - 1 | > 1e-6. `#` starts a
/// comment. Throws ParseError with the 1-based line number.
ParsedGraph parse_gain_graph(std::string_view text);

std::string serialize(const GainGraph& g);
std::string serialize(const WeightedGainGraph& wg);

}  // namespace gainspec
