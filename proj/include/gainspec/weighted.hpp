#pragma once

#include <vector>

#include "gainspec/core.hpp"

namespace gainspec {

/// Gain graph with a positive weight per edge.
class WeightedGainGraph {
public:
    // `weights` is parallel to base.edges(); every weight must be > 0.
    WeightedGainGraph(GainGraph base, std::vector<double> weights);
    // Unit weights.
    static WeightedGainGraph uniform(GainGraph base);

    const GainGraph& base() const { return base_; }
    std::span<const double> weights() const { return weights_; }
    double weight(int u, int v) const;

private:
    GainGraph base_;
    std::vector<double> weights_;
};

/// Entry (i,j) = gain(i->j) * weight on edges, else 0; the Hadamard product
/// of the gain adjacency with the weight matrix.
HermitianMatrix weighted_adjacency(const WeightedGainGraph& wg);

/// All simple cycles as vertex lists, each reported once: rooted at its
/// smallest vertex, direction fixed by second < last. DFS in ascending
/// neighbor order, so the output is deterministic.
std::vector<std::vector<int>> simple_cycles(const GainGraph& g);

/// One elementary subgraph (components are single edges or cycles) and its
/// contribution to a Sachs coefficient.
struct SachsTerm {
    std::vector<int> isolated_edges;        // indices into base().edges()
    std::vector<std::vector<int>> cycles;   // vertex lists
    int components = 0;                     // p(H)
    int cycle_count = 0;                    // c(H)
    double isolated_weight = 1.0;           // w(H_e)
    double total_weight = 1.0;              // w(H), over every edge of H
    double cycle_gain_re = 1.0;             // prod over cycles of Re(gain)
    double value = 0.0;                     // (-1)^p 2^c w(H_e) w(H) prod Re
};

struct SachsExpansion {
    // coefficients[i] = a_i of x^n + a_1 x^{n-1} + ... + a_n; a_0 = 1.
    std::vector<double> coefficients;
    // terms[i] lists every elementary subgraph on i vertices.
    std::vector<std::vector<SachsTerm>> terms;
};

/// Characteristic polynomial coefficients by exhaustive enumeration of
/// elementary subgraphs: disjoint cycle packings completed by matchings.
/// Throws PreconditionError when the graph has more than `max_vertices`
/// vertices (combinatorial explosion guard).
SachsExpansion sachs_coefficients(const WeightedGainGraph& wg, int max_vertices = 12);

/// Monic coefficients of prod (x - mu) over the eigenvalues of m; the
/// independent route the Sachs expansion is checked against.
std::vector<double> char_poly_from_spectrum(const HermitianMatrix& m);

/// cospectral(A(Phi_w), A(G_w)); holds iff the base graph is balanced.
bool weighted_balance_cospectral(const WeightedGainGraph& wg, double tol = kSpectralTol);

/// rho(A(Phi_w)) == rho(A(G_w)); holds iff balanced or anti-balanced.
bool weighted_radius_criterion(const WeightedGainGraph& wg, double tol = kSpectralTol);

}  // namespace gainspec
