#include "gainspec/core.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

namespace gainspec {

UnitGain::UnitGain(Complex z) {
    const double m = std::abs(z);
    if (!(std::abs(m - 1.0) <= kUnitTol)) {
        throw Error("gain is not on the unit circle: |z| = " + std::to_string(m));
    }
    value_ = z / m;
}

UnitGain UnitGain::normalized(Complex z, double tol) {
    const double m = std::abs(z);
    if (!(std::abs(m - 1.0) <= tol)) {
        throw Error("gain is not on the unit circle: |z| = " + std::to_string(m));
    }
    UnitGain g;
    g.value_ = z / m;
    return g;
}

UnitGain UnitGain::from_angle(double theta) {
    UnitGain g;
    g.value_ = std::polar(1.0, theta);
    return g;
}

UnitGain UnitGain::from_pi_fraction(long p, long q) {
    if (q == 0) throw Error("pi fraction with zero denominator");
    return from_angle(M_PI * static_cast<double>(p) / static_cast<double>(q));
}

UnitGain UnitGain::conj() const {
    UnitGain g;
    g.value_ = std::conj(value_);
    return g;
}

UnitGain UnitGain::operator*(UnitGain other) const {
    // Renormalize so long products cannot drift.
    return UnitGain(value_ * other.value_);
}

UnitGain UnitGain::operator-() const {
    UnitGain g;
    g.value_ = -value_;
    return g;
}

GainGraph::GainGraph(int n, std::vector<GainEdge> edges) : n_(n) {
    if (n < 0) throw DimensionError("negative vertex count");
    for (auto& e : edges) {
        if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw DimensionError("edge endpoint out of range");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            e.gain = e.gain.conj();
        }
    }
    std::sort(edges.begin(), edges.end(), [](const GainEdge& a, const GainEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
            throw Error("duplicate edge (" + std::to_string(edges[i].u) + ", " +
                        std::to_string(edges[i].v) + ")");
        }
    }
    edges_ = std::move(edges);

    adj_.assign(static_cast<std::size_t>(n_), {});
    adj_edge_.assign(static_cast<std::size_t>(n_), {});
    for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
        const auto& e = edges_[static_cast<std::size_t>(idx)];
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_edge_[static_cast<std::size_t>(e.u)].push_back(idx);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        adj_edge_[static_cast<std::size_t>(e.v)].push_back(idx);
    }
    for (int v = 0; v < n_; ++v) {
        auto& nb = adj_[static_cast<std::size_t>(v)];
        auto& ei = adj_edge_[static_cast<std::size_t>(v)];
        std::vector<std::pair<int, int>> order(nb.size());
        for (std::size_t k = 0; k < nb.size(); ++k) order[k] = {nb[k], ei[k]};
        std::sort(order.begin(), order.end());
        for (std::size_t k = 0; k < nb.size(); ++k) {
            nb[k] = order[k].first;
            ei[k] = order[k].second;
        }
    }
}

void GainGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DimensionError("vertex id out of range: " + std::to_string(v));
}

int GainGraph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return adj_edge_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
}

UnitGain GainGraph::gain(int u, int v) const {
    const int idx = edge_index(u, v);
    if (idx < 0) {
        throw InvalidPathError("no edge between " + std::to_string(u) + " and " +
                               std::to_string(v));
    }
    const auto& e = edges_[static_cast<std::size_t>(idx)];
    return (u == e.u) ? e.gain : e.gain.conj();
}

std::span<const int> GainGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool GainGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n_;
}

GainGraph GainGraph::negated() const {
    std::vector<GainEdge> es(edges_.begin(), edges_.end());
    for (auto& e : es) e.gain = -e.gain;
    return GainGraph(n_, std::move(es));
}

SwitchingFunction SwitchingFunction::identity(int n) {
    return SwitchingFunction(std::vector<UnitGain>(static_cast<std::size_t>(n)));
}

SwitchingFunction SwitchingFunction::conjugated() const {
    std::vector<UnitGain> z(zeta_.size());
    for (std::size_t i = 0; i < zeta_.size(); ++i) z[i] = zeta_[i].conj();
    return SwitchingFunction(std::move(z));
}

HermitianMatrix::HermitianMatrix(int n) : n_(n) {
    if (n < 0) throw DimensionError("negative matrix order");
    data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Complex(0.0, 0.0));
}

HermitianMatrix::HermitianMatrix(int n, std::vector<Complex> row_major) : n_(n) {
    if (n < 0) throw DimensionError("negative matrix order");
    if (row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw DimensionError("entry count does not match matrix order");
    }
    data_ = std::move(row_major);
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > 1e-10) {
                throw NumericalError("matrix is not Hermitian");
            }
        }
    }
}

void HermitianMatrix::set(int i, int j, Complex z) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw DimensionError("matrix index out of range");
    if (i == j) z = Complex(z.real(), 0.0);
    data_[static_cast<std::size_t>(i) * n_ + j] = z;
    data_[static_cast<std::size_t>(j) * n_ + i] = std::conj(z);
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i).real();
    return t;
}

HermitianMatrix HermitianMatrix::entrywise_abs() const {
    HermitianMatrix m(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) m.set(i, j, Complex(std::abs(at(i, j)), 0.0));
    }
    return m;
}

bool HermitianMatrix::approx_equal(const HermitianMatrix& other, double tol) const {
    if (other.n_ != n_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (std::abs(data_[k] - other.data_[k]) > tol) return false;
    }
    return true;
}

HermitianMatrix adjacency(const GainGraph& g) {
    HermitianMatrix a(g.order());
    for (const auto& e : g.edges()) a.set(e.u, e.v, e.gain.value());
    return a;
}

GainGraph switched(const GainGraph& g, const SwitchingFunction& zeta) {
    if (zeta.size() != g.order()) {
        throw DimensionError("switching function length does not match vertex count");
    }
    std::vector<GainEdge> es(g.edges().begin(), g.edges().end());
    for (auto& e : es) e.gain = zeta.at(e.u).conj() * e.gain * zeta.at(e.v);
    return GainGraph(g.order(), std::move(es));
}

UnitGain path_gain(const GainGraph& g, std::span<const int> path) {
    if (path.empty()) throw InvalidPathError("empty vertex sequence");
    UnitGain product;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        product = product * g.gain(path[k], path[k + 1]);
    }
    return product;
}

namespace detail {

SpanningTree bfs_spanning_tree(const GainGraph& g) {
    const int n = g.order();
    if (n == 0) throw ConnectivityError("empty graph");
    SpanningTree tree;
    tree.parent.assign(static_cast<std::size_t>(n), -2);  // -2 = unvisited
    tree.root_gain.assign(static_cast<std::size_t>(n), UnitGain());
    std::vector<char> tree_edge(static_cast<std::size_t>(g.edge_count()), 0);

    std::queue<int> q;
    q.push(0);
    tree.parent[0] = -1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        tree.bfs_order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (tree.parent[static_cast<std::size_t>(w)] == -2) {
                tree.parent[static_cast<std::size_t>(w)] = v;
                tree.root_gain[static_cast<std::size_t>(w)] =
                    tree.root_gain[static_cast<std::size_t>(v)] * g.gain(v, w);
                tree_edge[static_cast<std::size_t>(g.edge_index(v, w))] = 1;
                q.push(w);
            }
        }
    }
    if (static_cast<int>(tree.bfs_order.size()) != n) {
        throw ConnectivityError("graph is not connected");
    }
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        if (!tree_edge[static_cast<std::size_t>(idx)]) tree.non_tree_edges.push_back(idx);
    }
    return tree;
}

std::vector<int> fundamental_cycle(const SpanningTree& tree, const GainEdge& e) {
    // Tree paths from both endpoints up to their lowest common ancestor.
    std::vector<int> up_u{e.u}, up_v{e.v};
    std::vector<char> on_u(tree.parent.size(), 0);
    for (int x = e.u; x != -1; x = tree.parent[static_cast<std::size_t>(x)]) {
        on_u[static_cast<std::size_t>(x)] = 1;
        if (x != e.u) up_u.push_back(x);
    }
    int meet = e.v;
    while (!on_u[static_cast<std::size_t>(meet)]) {
        meet = tree.parent[static_cast<std::size_t>(meet)];
        up_v.push_back(meet);
    }
    std::vector<int> cycle;
    for (int x : up_u) {
        cycle.push_back(x);
        if (x == meet) break;
    }
    // up_v runs v -> meet; append it reversed, without repeating meet.
    for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) {
        if (*it != meet) cycle.push_back(*it);
    }
    return cycle;  // closed by the non-tree edge v -> u
}

}  // namespace detail

BalanceResult is_balanced(const GainGraph& g) {
    const auto tree = detail::bfs_spanning_tree(g);
    BalanceResult result;
    for (int idx : tree.non_tree_edges) {
        const auto& e = g.edges()[static_cast<std::size_t>(idx)];
        // Closed walk root -> u, edge u -> v, v -> root; tree segments shared
        // by both paths cancel, leaving the fundamental cycle gain.
        const UnitGain cycle_gain = tree.root_gain[static_cast<std::size_t>(e.u)] * e.gain *
                                    tree.root_gain[static_cast<std::size_t>(e.v)].conj();
        if (!cycle_gain.approx_equal(UnitGain())) {
            result.balanced = false;
            result.certificate_cycle = detail::fundamental_cycle(tree, e);
            result.certificate_gain = path_gain(g, result.certificate_cycle) *
                                      g.gain(result.certificate_cycle.back(),
                                             result.certificate_cycle.front());
            return result;
        }
    }
    result.balanced = true;
    // zeta(v) = gain of the tree path v -> root switches every gain to 1:
    // zeta(u)^{-1} g(u,v) zeta(v) = h(u) g(u,v) conj(h(v)) = 1 on tree edges,
    // and balance extends that to the rest.
    std::vector<UnitGain> zeta(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        zeta[static_cast<std::size_t>(v)] = tree.root_gain[static_cast<std::size_t>(v)].conj();
    }
    result.switching = SwitchingFunction(std::move(zeta));
    return result;
}

bool is_antibalanced(const GainGraph& g) {
    return is_balanced(g.negated()).balanced;
}

bool switching_equivalent(const GainGraph& g1, const GainGraph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) {
        throw MismatchError("different underlying graphs");
    }
    for (int idx = 0; idx < g1.edge_count(); ++idx) {
        const auto& a = g1.edges()[static_cast<std::size_t>(idx)];
        const auto& b = g2.edges()[static_cast<std::size_t>(idx)];
        if (a.u != b.u || a.v != b.v) throw MismatchError("different underlying graphs");
    }
    const auto t1 = detail::bfs_spanning_tree(g1);
    for (int idx : t1.non_tree_edges) {
        const auto& e1 = g1.edges()[static_cast<std::size_t>(idx)];
        const auto cycle = detail::fundamental_cycle(t1, e1);
        const UnitGain c1 =
            path_gain(g1, cycle) * g1.gain(cycle.back(), cycle.front());
        const UnitGain c2 =
            path_gain(g2, cycle) * g2.gain(cycle.back(), cycle.front());
        if (!c1.approx_equal(c2)) return false;
    }
    return true;
}

}  // namespace gainspec
