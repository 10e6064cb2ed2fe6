#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gainspec/errors.hpp"

namespace gainspec {

using Complex = std::complex<double>;

// Tolerance under which two unit gains count as the same value.
inline constexpr double kGainEps = 1e-9;
// Admission tolerance for |z| when constructing a UnitGain.
inline constexpr double kUnitTol = 1e-12;
// Default tolerance for spectral comparisons.
inline constexpr double kSpectralTol = 1e-8;

/// A complex number of modulus one. Construction rejects values farther than
/// kUnitTol from the unit circle and renormalizes what it accepts, so chained
/// products never drift off the circle.
class UnitGain {
public:
    UnitGain() : value_(1.0, 0.0) {}
    explicit UnitGain(Complex z);

    // Looser admission used by the text parser; normalizes when |z| is
    // within `tol` of 1, throws Error otherwise.
    static UnitGain normalized(Complex z, double tol);
    static UnitGain from_angle(double theta);
    // Exactly e^{i pi p/q}.
    static UnitGain from_pi_fraction(long p, long q);

    Complex value() const { return value_; }
    double re() const { return value_.real(); }
    double im() const { return value_.imag(); }

    UnitGain conj() const;
    UnitGain operator*(UnitGain other) const;
    UnitGain operator-() const;

    bool approx_equal(UnitGain other, double eps = kGainEps) const {
        return std::abs(value_ - other.value_) <= eps;
    }

private:
    Complex value_;
};

/// Edge with its gain stored on the canonical orientation u -> v, u < v.
/// The opposite orientation carries the conjugate gain; storing one side
/// makes the conjugation rule structural.
struct GainEdge {
    int u = 0;
    int v = 0;
    UnitGain gain;
};

/// Simple undirected graph with a unit complex gain per oriented edge.
/// Immutable after construction. Connectivity is not an invariant; the
/// operations that need it check.
class GainGraph {
public:
    GainGraph(int n, std::vector<GainEdge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Edges in lexicographic (u, v) order, u < v.
    std::span<const GainEdge> edges() const { return edges_; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // Index into edges() for the unordered pair {u, v}, or -1.
    int edge_index(int u, int v) const;
    // Gain of the oriented edge u -> v. Throws InvalidPathError on a non-edge.
    UnitGain gain(int u, int v) const;
    // Neighbor ids in ascending order.
    std::span<const int> neighbors(int v) const;

    bool connected() const;
    // Same graph with every gain negated (-Phi).
    GainGraph negated() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<GainEdge> edges_;
    std::vector<std::vector<int>> adj_;       // neighbor ids, ascending
    std::vector<std::vector<int>> adj_edge_;  // parallel indices into edges_
};

/// Per-vertex unit scalar zeta. Switching replaces the gain of every edge
/// u -> v by zeta(u)^{-1} * gain * zeta(v).
class SwitchingFunction {
public:
    explicit SwitchingFunction(std::vector<UnitGain> zeta) : zeta_(std::move(zeta)) {}
    static SwitchingFunction identity(int n);

    int size() const { return static_cast<int>(zeta_.size()); }
    UnitGain at(int v) const { return zeta_[static_cast<std::size_t>(v)]; }
    std::span<const UnitGain> values() const { return zeta_; }
    // Entrywise conjugate; undoes the original switching.
    SwitchingFunction conjugated() const;

private:
    std::vector<UnitGain> zeta_;
};

/// Dense Hermitian matrix. Writes go through set(), which mirrors the
/// conjugate entry, so instances stay exactly Hermitian.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int n);
    // Validates A[i][j] == conj(A[j][i]) within 1e-10; throws NumericalError.
    HermitianMatrix(int n, std::vector<Complex> row_major);

    int order() const { return n_; }
    Complex at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, Complex z);

    double frobenius_norm() const;
    double trace_real() const;
    // Entrywise modulus; the underlying-graph matrix of a gain adjacency.
    HermitianMatrix entrywise_abs() const;
    bool approx_equal(const HermitianMatrix& other, double tol) const;

private:
    int n_ = 0;
    std::vector<Complex> data_;
};

// --- operations ------------------------------------------------------------

/// Gain adjacency matrix: entry (s,t) is the gain of s -> t on edges, else 0.
HermitianMatrix adjacency(const GainGraph& g);

/// Graph with gains zeta(u)^{-1} * gain(u->v) * zeta(v); same underlying graph.
GainGraph switched(const GainGraph& g, const SwitchingFunction& zeta);

/// Product of oriented edge gains along a vertex sequence. Reversing the
/// sequence conjugates the result.
UnitGain path_gain(const GainGraph& g, std::span<const int> path);

struct BalanceResult {
    bool balanced = false;
    // Present when balanced: switches the graph to all-ones gains.
    std::optional<SwitchingFunction> switching;
    // Present when unbalanced: one non-neutral fundamental cycle, as a
    // closed vertex sequence (last edge returns to front()).
    std::vector<int> certificate_cycle;
    UnitGain certificate_gain;
};

/// Decides balance by checking every fundamental cycle of a BFS spanning
/// tree for gain 1. Requires a connected graph.
BalanceResult is_balanced(const GainGraph& g);

/// Balance of -Phi.
bool is_antibalanced(const GainGraph& g);

/// True iff all fundamental-cycle gains with respect to a common spanning
/// tree agree. Requires the same underlying graph on both sides.
bool switching_equivalent(const GainGraph& g1, const GainGraph& g2);

namespace detail {

// BFS spanning tree from vertex 0, children visited in ascending id.
struct SpanningTree {
    std::vector<int> parent;         // -1 at the root
    std::vector<int> bfs_order;
    std::vector<UnitGain> root_gain; // gain of the tree path root -> v
    std::vector<int> non_tree_edges; // indices into g.edges()
};
SpanningTree bfs_spanning_tree(const GainGraph& g);

// Fundamental cycle of a non-tree edge, as a closed vertex sequence.
std::vector<int> fundamental_cycle(const SpanningTree& tree, const GainEdge& e);

}  // namespace detail

}  // namespace gainspec
