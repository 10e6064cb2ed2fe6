#include "gainspec/weighted.hpp"

#include <algorithm>
#include <cmath>

#include "gainspec/spectra.hpp"

namespace gainspec {

WeightedGainGraph::WeightedGainGraph(GainGraph base, std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != base_.edge_count()) {
        throw DimensionError("one weight per edge required");
    }
    for (double w : weights_) {
        if (!(w > 0.0)) throw Error("edge weights must be positive");
    }
}

WeightedGainGraph WeightedGainGraph::uniform(GainGraph base) {
    const std::size_t m = static_cast<std::size_t>(base.edge_count());
    return WeightedGainGraph(std::move(base), std::vector<double>(m, 1.0));
}

double WeightedGainGraph::weight(int u, int v) const {
    const int idx = base_.edge_index(u, v);
    if (idx < 0) {
        throw InvalidPathError("no edge between " + std::to_string(u) + " and " +
                               std::to_string(v));
    }
    return weights_[static_cast<std::size_t>(idx)];
}

HermitianMatrix weighted_adjacency(const WeightedGainGraph& wg) {
    HermitianMatrix a(wg.base().order());
    const auto edges = wg.base().edges();
    for (int idx = 0; idx < static_cast<int>(edges.size()); ++idx) {
        const auto& e = edges[static_cast<std::size_t>(idx)];
        a.set(e.u, e.v, e.gain.value() * wg.weights()[static_cast<std::size_t>(idx)]);
    }
    return a;
}

std::vector<std::vector<int>> simple_cycles(const GainGraph& g) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);

    // Rooted at the smallest cycle vertex; only larger vertices may appear
    // later on the path, and second < last kills the mirror image.
    auto dfs = [&](auto&& self, int root, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == root && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
                continue;
            }
            if (w <= root || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, root, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };

    for (int root = 0; root < g.order(); ++root) {
        path.assign(1, root);
        on_path.assign(static_cast<std::size_t>(g.order()), 0);
        on_path[static_cast<std::size_t>(root)] = 1;
        dfs(dfs, root, root);
    }
    return cycles;
}

namespace {

struct CycleInfo {
    std::vector<int> vertices;
    std::uint64_t mask = 0;
    double weight = 1.0;   // product of edge weights around the cycle
    double gain_re = 1.0;  // Re of the cycle gain; orientation irrelevant
};

std::uint64_t vertex_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= (std::uint64_t{1} << v);
    return m;
}

}  // namespace

SachsExpansion sachs_coefficients(const WeightedGainGraph& wg, int max_vertices) {
    const GainGraph& g = wg.base();
    const int n = g.order();
    if (n > max_vertices) {
        throw PreconditionError("vertex count " + std::to_string(n) +
                                " exceeds the enumeration bound " +
                                std::to_string(max_vertices));
    }

    std::vector<CycleInfo> cycles;
    for (auto& vs : simple_cycles(g)) {
        CycleInfo info;
        info.mask = vertex_mask(vs);
        Complex gain(1.0, 0.0);
        for (std::size_t k = 0; k < vs.size(); ++k) {
            const int a = vs[k];
            const int b = vs[(k + 1) % vs.size()];
            gain *= g.gain(a, b).value();
            info.weight *= wg.weight(a, b);
        }
        info.gain_re = gain.real();
        info.vertices = std::move(vs);
        cycles.push_back(std::move(info));
    }

    SachsExpansion expansion;
    expansion.coefficients.assign(static_cast<std::size_t>(n) + 1, 0.0);
    expansion.coefficients[0] = 1.0;
    expansion.terms.resize(static_cast<std::size_t>(n) + 1);

    const auto edges = g.edges();

    std::vector<int> chosen_cycles;
    std::vector<int> matching;

    auto emit = [&]() {
        int vertex_count = 0;
        for (int c : chosen_cycles) {
            vertex_count += static_cast<int>(cycles[static_cast<std::size_t>(c)].vertices.size());
        }
        vertex_count += 2 * static_cast<int>(matching.size());
        if (vertex_count == 0) return;  // empty subgraph backs a_0 = 1

        SachsTerm term;
        term.cycle_count = static_cast<int>(chosen_cycles.size());
        term.components = term.cycle_count + static_cast<int>(matching.size());
        for (int c : chosen_cycles) {
            const auto& info = cycles[static_cast<std::size_t>(c)];
            term.cycles.push_back(info.vertices);
            term.total_weight *= info.weight;
            term.cycle_gain_re *= info.gain_re;
        }
        for (int e : matching) {
            term.isolated_edges.push_back(e);
            const double w = wg.weights()[static_cast<std::size_t>(e)];
            term.isolated_weight *= w;
            term.total_weight *= w;
        }
        const double sign = (term.components % 2 == 0) ? 1.0 : -1.0;
        term.value = sign * std::ldexp(1.0, term.cycle_count) * term.isolated_weight *
                     term.total_weight * term.cycle_gain_re;
        expansion.coefficients[static_cast<std::size_t>(vertex_count)] += term.value;
        expansion.terms[static_cast<std::size_t>(vertex_count)].push_back(std::move(term));
    };

    // All matchings on the vertices outside `used`, each exactly once: the
    // lowest undecided vertex is either left uncovered or matched to a free
    // neighbor (necessarily higher, since lower ones are all decided).
    auto enumerate_matchings = [&](auto&& self, std::uint64_t used, int v) -> void {
        while (v < n && ((used >> v) & 1)) ++v;
        if (v == n) {
            emit();
            return;
        }
        self(self, used | (std::uint64_t{1} << v), v + 1);
        for (int w : g.neighbors(v)) {
            if ((used >> w) & 1 || w < v) continue;
            matching.push_back(g.edge_index(v, w));
            self(self, used | (std::uint64_t{1} << v) | (std::uint64_t{1} << w), v + 1);
            matching.pop_back();
        }
    };

    // Disjoint cycle subsets in ascending index order; each subset is then
    // completed by every matching on the remaining vertices.
    auto enumerate_cycle_sets = [&](auto&& self, std::uint64_t used, int from) -> void {
        enumerate_matchings(enumerate_matchings, used, 0);
        for (int c = from; c < static_cast<int>(cycles.size()); ++c) {
            if (cycles[static_cast<std::size_t>(c)].mask & used) continue;
            chosen_cycles.push_back(c);
            self(self, used | cycles[static_cast<std::size_t>(c)].mask, c + 1);
            chosen_cycles.pop_back();
        }
    };
    enumerate_cycle_sets(enumerate_cycle_sets, 0, 0);

    return expansion;
}

std::vector<double> char_poly_from_spectrum(const HermitianMatrix& m) {
    const auto spectrum = eigenvalues_hermitian(m);
    // Descending powers: coeffs[0] is the leading coefficient.
    std::vector<double> coeffs{1.0};
    for (double mu : spectrum.eigenvalues) {
        coeffs.push_back(0.0);
        for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
            coeffs[k] -= mu * coeffs[k - 1];
        }
    }
    return coeffs;
}

bool weighted_balance_cospectral(const WeightedGainGraph& wg, double tol) {
    if (!wg.base().connected()) throw ConnectivityError("graph is not connected");
    const auto a = weighted_adjacency(wg);
    return cospectral(a, a.entrywise_abs(), tol);
}

bool weighted_radius_criterion(const WeightedGainGraph& wg, double tol) {
    if (!wg.base().connected()) throw ConnectivityError("graph is not connected");
    const auto a = weighted_adjacency(wg);
    const auto phi = eigenvalues_hermitian(a);
    const auto underlying = eigenvalues_hermitian(a.entrywise_abs());
    return std::abs(phi.spectral_radius() - underlying.spectral_radius()) <= tol;
}

}  // namespace gainspec
