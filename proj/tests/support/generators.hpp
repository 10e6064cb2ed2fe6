#pragma once

// Deterministic random-instance generators shared by the unit and
// acceptance suites. Every function takes the engine by reference, so a
// fixed seed reproduces the exact instance stream.

#include <random>
#include <vector>

#include "gainspec/core.hpp"

namespace gainspec::testing {

using Rng = std::mt19937;

// Connected Erdos-Renyi graph with all-ones gains; resamples until connected.
GainGraph random_connected_graph(Rng& rng, int n, double edge_prob);

// Connected bipartite graph with all-ones gains.
GainGraph random_connected_bipartite(Rng& rng, int n, double edge_prob);

// Same underlying graph, gains e^{i theta} with uniform theta.
GainGraph with_random_gains(Rng& rng, const GainGraph& g);

// Same underlying graph, gains drawn from {+1, -1}.
GainGraph with_random_signs(Rng& rng, const GainGraph& g);

SwitchingFunction random_switching(Rng& rng, int n);

// Balanced with nontrivial gains: a random switching of the all-ones graph.
GainGraph random_balanced(Rng& rng, const GainGraph& g);

std::vector<double> random_weights(Rng& rng, int count, double lo, double hi);

// Disjoint union of a and b with one vertex of b glued onto one vertex of a;
// guarantees at least two blocks when both sides have an edge.
GainGraph glue_at_vertex(Rng& rng, const GainGraph& a, const GainGraph& b);

// Cycle C_n plus random chords; resampled until non-geodetic. Biconnected by
// construction. All-ones gains.
GainGraph random_biconnected_nongeodetic(Rng& rng, int n, double chord_prob);

// C4 carrying gains e^{+i theta} and e^{-i theta} on the two edges at vertex
// 0, so the opposite pair sees a conjugate gain pair (Re tie, order
// dependence), plus `pendants` extra tree vertices hung at random.
GainGraph planted_conjugate_pair(Rng& rng, int pendants);

}  // namespace gainspec::testing
