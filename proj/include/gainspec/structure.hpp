#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gainspec/core.hpp"

namespace gainspec {

/// Biconnected components as edge sets, plus the cut vertices.
struct BlockDecomposition {
    // Each block's edges in lexicographic (u, v) order; blocks ordered by
    // their smallest edge.
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<int> cut_vertices;  // ascending
};

/// DFS lowpoint decomposition. Requires a connected graph.
BlockDecomposition block_decomposition(const GainGraph& g);

/// A block as its own gain graph with dense vertex ids; to_parent maps a
/// local id back to the original vertex.
struct BlockSubgraph {
    GainGraph graph;
    std::vector<int> to_parent;
};
BlockSubgraph block_subgraph(const GainGraph& g,
                             std::span<const std::pair<int, int>> block_edges);

bool is_bipartite(const GainGraph& g);

/// Connected, at least three vertices, no cut vertex.
bool is_biconnected(const GainGraph& g);

/// For bipartite graphs, distance compatibility reduces to balance; returns
/// the balance verdict. Throws PreconditionError on non-bipartite input.
bool bipartite_compatibility_criterion(const GainGraph& g);

/// Conjunction of distance compatibility over the blocks; agrees with the
/// whole-graph verdict.
bool blockwise_compatibility(const GainGraph& g);

/// Incompatibility witness for 2-connected non-geodetic graphs: an even
/// non-neutral cycle whose two halves are shortest paths between a
/// diametrical pair (s, t) with no shorter connection.
struct IncompatibilityWitness {
    std::vector<int> cycle;
    int s = 0;
    int t = 0;
};

/// Scans pairs in ascending distance; the first incompatible pair yields two
/// internally disjoint shortest paths of different gains, whose union is the
/// witness cycle. Returns nullopt when the graph is compatible. Throws
/// PreconditionError unless the graph is 2-connected and non-geodetic.
std::optional<IncompatibilityWitness> incompatibility_witness(const GainGraph& g);

}  // namespace gainspec
