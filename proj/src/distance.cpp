#include "gainspec/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gainspec {

VertexOrder::VertexOrder(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
        const int v = perm_[static_cast<std::size_t>(k)];
        if (v < 0 || v >= n || rank_[static_cast<std::size_t>(v)] != -1) {
            throw DimensionError("vertex order is not a permutation");
        }
        rank_[static_cast<std::size_t>(v)] = k;
    }
}

VertexOrder VertexOrder::standard(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return VertexOrder(std::move(p));
}

VertexOrder VertexOrder::reversed(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::reverse(p.begin(), p.end());
    return VertexOrder(std::move(p));
}

namespace detail {

int lex_max_index(std::span<const UnitGain> gains) {
    double max_re = gains[0].re();
    for (const auto& g : gains) max_re = std::max(max_re, g.re());
    int best = -1;
    for (int i = 0; i < static_cast<int>(gains.size()); ++i) {
        if (gains[static_cast<std::size_t>(i)].re() < max_re - kGainEps) continue;
        if (best < 0 ||
            gains[static_cast<std::size_t>(i)].im() > gains[static_cast<std::size_t>(best)].im()) {
            best = i;
        }
    }
    return best;
}

int lex_min_index(std::span<const UnitGain> gains) {
    double min_re = gains[0].re();
    for (const auto& g : gains) min_re = std::min(min_re, g.re());
    int best = -1;
    for (int i = 0; i < static_cast<int>(gains.size()); ++i) {
        if (gains[static_cast<std::size_t>(i)].re() > min_re + kGainEps) continue;
        if (best < 0 ||
            gains[static_cast<std::size_t>(i)].im() < gains[static_cast<std::size_t>(best)].im()) {
            best = i;
        }
    }
    return best;
}

namespace {

// Gains realized within the Re-maximizing (resp. minimizing) subset that
// differ from each other: present iff the pair breaks order independence.
std::vector<UnitGain> re_tied_subset(std::span<const UnitGain> gains, bool maximize) {
    double extreme = gains[0].re();
    for (const auto& g : gains) {
        extreme = maximize ? std::max(extreme, g.re()) : std::min(extreme, g.re());
    }
    std::vector<UnitGain> subset;
    for (const auto& g : gains) {
        const bool in = maximize ? (g.re() >= extreme - kGainEps) : (g.re() <= extreme + kGainEps);
        if (in) subset.push_back(g);
    }
    return subset;
}

void check_order(const GainGraph& g, const VertexOrder& order) {
    if (order.size() != g.order()) {
        throw DimensionError("vertex order size does not match vertex count");
    }
}

}  // namespace
}  // namespace detail

namespace {

UnitGain auxiliary_gain(const GainGraph& g, const VertexOrder& order, int s, int t,
                        bool maximize) {
    detail::check_order(g, order);
    if (s == t) return UnitGain();
    const bool forward = order.less(s, t);
    const int a = forward ? s : t;
    const int b = forward ? t : s;
    const auto set = shortest_gain_set(g, a, b);
    const int idx = maximize ? detail::lex_max_index(set.gains) : detail::lex_min_index(set.gains);
    const UnitGain chosen = set.gains[static_cast<std::size_t>(idx)];
    return forward ? chosen : chosen.conj();
}

}  // namespace

UnitGain auxiliary_gain_max(const GainGraph& g, const VertexOrder& order, int s, int t) {
    return auxiliary_gain(g, order, s, t, true);
}

UnitGain auxiliary_gain_min(const GainGraph& g, const VertexOrder& order, int s, int t) {
    return auxiliary_gain(g, order, s, t, false);
}

namespace {

// One DP pass per source; table[s][t] is the oriented s -> t gain set.
std::vector<std::vector<ShortestPathGainSet>> all_pair_gain_sets(const GainGraph& g) {
    std::vector<std::vector<ShortestPathGainSet>> table;
    table.reserve(static_cast<std::size_t>(g.order()));
    for (int s = 0; s < g.order(); ++s) table.push_back(gain_sets_from(g, s));
    return table;
}

}  // namespace

DistanceMatrices distance_matrices(const GainGraph& g, const VertexOrder& order) {
    detail::check_order(g, order);
    const int n = g.order();
    const auto table = all_pair_gain_sets(g);
    HermitianMatrix dmax(n), dmin(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool forward = order.less(i, j);
            const int a = forward ? i : j;
            const int b = forward ? j : i;
            const auto& set = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            const double d = static_cast<double>(set.dist);
            Complex max_gain =
                set.gains[static_cast<std::size_t>(detail::lex_max_index(set.gains))].value();
            Complex min_gain =
                set.gains[static_cast<std::size_t>(detail::lex_min_index(set.gains))].value();
            if (!forward) {
                max_gain = std::conj(max_gain);
                min_gain = std::conj(min_gain);
            }
            dmax.set(i, j, max_gain * d);
            dmin.set(i, j, min_gain * d);
        }
    }
    return DistanceMatrices{order, std::move(dmax), std::move(dmin)};
}

OrderIndependenceResult is_order_independent(const GainGraph& g) {
    const auto table = all_pair_gain_sets(g);
    OrderIndependenceResult result;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
            const auto& gains = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].gains;
            for (bool maximize : {true, false}) {
                auto subset = detail::re_tied_subset(gains, maximize);
                if (subset.size() < 2) continue;
                result.independent = false;
                result.witness_pair = {i, j};
                // Report the Im-extremes of the tied subset: the conjugate
                // gain pair that flips between the two orders.
                std::sort(subset.begin(), subset.end(), [](UnitGain a, UnitGain b) {
                    return a.im() > b.im();
                });
                result.witness_gains = {subset.front(), subset.back()};
                return result;
            }
        }
    }
    return result;
}

CompatibilityResult is_distance_compatible(const GainGraph& g) {
    const int n = g.order();
    const auto table = all_pair_gain_sets(g);
    CompatibilityResult result;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& set = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (set.gains.size() > 1) {
                result.compatible = false;
                result.witness_pair = {i, j};
                result.witness_gains = set.gains;
                return result;
            }
        }
    }
    result.compatible = true;
    HermitianMatrix d(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& set = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            d.set(i, j, set.gains[0].value() * static_cast<double>(set.dist));
        }
    }
    result.distance_matrix = std::move(d);
    return result;
}

char to_char(BalanceClass c) {
    switch (c) {
        case BalanceClass::A: return 'A';
        case BalanceClass::B: return 'B';
        case BalanceClass::C: return 'C';
        case BalanceClass::D: return 'D';
    }
    return '?';
}

BalanceClass classify(const GainGraph& g) {
    if (is_balanced(g).balanced || is_antibalanced(g) || is_geodetic(g)) {
        return BalanceClass::A;
    }
    if (!is_order_independent(g).independent) return BalanceClass::D;
    return is_distance_compatible(g).compatible ? BalanceClass::B : BalanceClass::C;
}

namespace {

GainGraph completion(const GainGraph& g, const VertexOrder& order, bool maximize) {
    detail::check_order(g, order);
    const int n = g.order();
    const auto table = all_pair_gain_sets(g);
    std::vector<GainEdge> edges(g.edges().begin(), g.edges().end());
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            const bool forward = order.less(u, v);
            const int a = forward ? u : v;
            const int b = forward ? v : u;
            const auto& set = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            const int idx = maximize ? detail::lex_max_index(set.gains)
                                     : detail::lex_min_index(set.gains);
            UnitGain gain = set.gains[static_cast<std::size_t>(idx)];
            if (!forward) gain = gain.conj();
            edges.push_back(GainEdge{u, v, gain});
        }
    }
    return GainGraph(n, std::move(edges));
}

}  // namespace

GainGraph completion_max(const GainGraph& g, const VertexOrder& order) {
    return completion(g, order, true);
}

GainGraph completion_min(const GainGraph& g, const VertexOrder& order) {
    return completion(g, order, false);
}

}  // namespace gainspec
