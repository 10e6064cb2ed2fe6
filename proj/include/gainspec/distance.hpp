#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gainspec/core.hpp"
#include "gainspec/paths.hpp"

namespace gainspec {

/// Total order on vertices: perm[k] is the k-th smallest vertex.
class VertexOrder {
public:
    explicit VertexOrder(std::vector<int> perm);
    static VertexOrder standard(int n);
    static VertexOrder reversed(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    std::span<const int> perm() const { return perm_; }
    // rank()[v] = position of vertex v in the order.
    std::span<const int> rank() const { return rank_; }
    bool less(int u, int v) const { return rank_[static_cast<std::size_t>(u)] < rank_[static_cast<std::size_t>(v)]; }

private:
    std::vector<int> perm_, rank_;
};

/// D^max and D^min under a vertex order. Entries are gain times hop
/// distance, so their moduli reproduce the classical distance matrix.
struct DistanceMatrices {
    VertexOrder order;
    HermitianMatrix dmax;
    HermitianMatrix dmin;
};

/// Lexicographic (Re, Im) maximum of the shortest-path gain set for the
/// pair ordered by `order`; conjugated when s comes after t. Re ties are
/// detected with kGainEps. s == t returns 1 by convention.
UnitGain auxiliary_gain_max(const GainGraph& g, const VertexOrder& order, int s, int t);
UnitGain auxiliary_gain_min(const GainGraph& g, const VertexOrder& order, int s, int t);

DistanceMatrices distance_matrices(const GainGraph& g, const VertexOrder& order);

struct OrderIndependenceResult {
    bool independent = true;
    // First offending pair in lexicographic order, with the conjugate gain
    // pair {x+iy, x-iy} realized by its Re-extremal shortest paths.
    std::optional<std::pair<int, int>> witness_pair;
    std::vector<UnitGain> witness_gains;
};

/// True iff for every pair both the Re-maximizing and the Re-minimizing
/// subsets of the shortest-path gain set are single gains. Equivalent to
/// the distance matrices agreeing under the standard and reversed orders.
OrderIndependenceResult is_order_independent(const GainGraph& g);

struct CompatibilityResult {
    bool compatible = false;
    // D(Phi), present when compatible.
    std::optional<HermitianMatrix> distance_matrix;
    std::optional<std::pair<int, int>> witness_pair;
    std::vector<UnitGain> witness_gains;
};

/// True iff every pair's shortest-path gain set is a singleton; then
/// D^max = D^min for every vertex order and D(Phi) is well defined.
CompatibilityResult is_distance_compatible(const GainGraph& g);

/// (A) balanced/anti-balanced/geodetic; (B) none of those but compatible;
/// (C) order independent with D^max != D^min; (D) order dependent.
enum class BalanceClass { A, B, C, D };
char to_char(BalanceClass c);
BalanceClass classify(const GainGraph& g);

/// Complete gain graph on the same vertices: original edges keep their
/// gains, each non-adjacent pair gets its auxiliary gain under `order`.
GainGraph completion_max(const GainGraph& g, const VertexOrder& order);
GainGraph completion_min(const GainGraph& g, const VertexOrder& order);

namespace detail {

// Lexicographic (Re, Im) extremes over a non-empty distinct gain set, with
// kGainEps tolerance on the Re comparison. Returns indices into `gains`.
int lex_max_index(std::span<const UnitGain> gains);
int lex_min_index(std::span<const UnitGain> gains);

}  // namespace detail

}  // namespace gainspec
