#include "gainspec/structure.hpp"

#include <algorithm>
#include <queue>

#include "gainspec/distance.hpp"
#include "gainspec/paths.hpp"

namespace gainspec {

BlockDecomposition block_decomposition(const GainGraph& g) {
    const int n = g.order();
    if (!g.connected()) throw ConnectivityError("graph is not connected");

    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;

    // Iterative DFS; each frame tracks its position in the neighbor list.
    struct Frame {
        int v;
        int parent;
        std::size_t next = 0;
        int children = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1});
    depth[0] = 0;
    low[0] = 0;

    auto pop_block = [&](std::pair<int, int> until) {
        std::vector<std::pair<int, int>> block;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        blocks.push_back(std::move(block));
    };

    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
            const int w = nbrs[f.next++];
            if (depth[static_cast<std::size_t>(w)] < 0) {
                edge_stack.push_back({std::min(f.v, w), std::max(f.v, w)});
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(f.v)] + 1;
                low[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(w)];
                ++f.children;
                stack.push_back({w, f.v});
            } else if (w != f.parent &&
                       depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(f.v)]) {
                edge_stack.push_back({std::min(f.v, w), std::max(f.v, w)});
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], depth[static_cast<std::size_t>(w)]);
            }
        } else {
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) is_cut[static_cast<std::size_t>(done.v)] = 1;
                break;
            }
            Frame& parent = stack.back();
            low[static_cast<std::size_t>(parent.v)] = std::min(
                low[static_cast<std::size_t>(parent.v)], low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] >= depth[static_cast<std::size_t>(parent.v)]) {
                // parent closes a block through this child
                if (parent.parent != -1) is_cut[static_cast<std::size_t>(parent.v)] = 1;
                pop_block({std::min(parent.v, done.v), std::max(parent.v, done.v)});
            }
        }
    }

    BlockDecomposition result;
    for (auto& block : blocks) {
        std::sort(block.begin(), block.end());
        result.blocks.push_back(std::move(block));
    }
    std::sort(result.blocks.begin(), result.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int v = 0; v < n; ++v) {
        if (is_cut[static_cast<std::size_t>(v)]) result.cut_vertices.push_back(v);
    }
    return result;
}

BlockSubgraph block_subgraph(const GainGraph& g,
                             std::span<const std::pair<int, int>> block_edges) {
    std::vector<int> vertices;
    for (const auto& [u, v] : block_edges) {
        vertices.push_back(u);
        vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (int k = 0; k < static_cast<int>(vertices.size()); ++k) {
        local[static_cast<std::size_t>(vertices[static_cast<std::size_t>(k)])] = k;
    }
    std::vector<GainEdge> edges;
    for (const auto& [u, v] : block_edges) {
        edges.push_back(GainEdge{local[static_cast<std::size_t>(u)],
                                 local[static_cast<std::size_t>(v)], g.gain(u, v)});
    }
    return BlockSubgraph{GainGraph(static_cast<int>(vertices.size()), std::move(edges)),
                         std::move(vertices)};
}

bool is_bipartite(const GainGraph& g) {
    if (!g.connected()) throw ConnectivityError("graph is not connected");
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    if (g.order() == 0) return true;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(w)] < 0) {
                color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                q.push(w);
            } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
    }
    return true;
}

bool is_biconnected(const GainGraph& g) {
    if (g.order() < 3 || !g.connected()) return false;
    return block_decomposition(g).cut_vertices.empty();
}

bool bipartite_compatibility_criterion(const GainGraph& g) {
    if (!is_bipartite(g)) throw PreconditionError("graph is not bipartite");
    return is_balanced(g).balanced;
}

bool blockwise_compatibility(const GainGraph& g) {
    const auto decomposition = block_decomposition(g);
    for (const auto& block : decomposition.blocks) {
        const auto sub = block_subgraph(g, block);
        if (!is_distance_compatible(sub.graph).compatible) return false;
    }
    return true;
}

std::optional<IncompatibilityWitness> incompatibility_witness(const GainGraph& g) {
    if (!is_biconnected(g)) throw PreconditionError("graph is not 2-connected");
    if (is_geodetic(g)) throw PreconditionError("graph is geodetic");

    // Incompatible pairs in ascending distance, ties by vertex ids.
    struct Pair {
        int dist, s, t;
    };
    std::vector<Pair> pairs;
    const int n = g.order();
    std::vector<std::vector<ShortestPathGainSet>> table;
    for (int s = 0; s < n; ++s) table.push_back(gain_sets_from(g, s));
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            const auto& set = table[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
            if (set.gains.size() > 1) pairs.push_back({set.dist, s, t});
        }
    }
    if (pairs.empty()) return std::nullopt;
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        return std::tie(a.dist, a.s, a.t) < std::tie(b.dist, b.s, b.t);
    });

    // A least-distance incompatible pair always carries two internally
    // disjoint shortest paths of different gains; their union is an even
    // non-neutral cycle with s, t diametrically opposite.
    const auto& least = pairs.front();
    const auto paths = enumerate_shortest_paths(g, least.s, least.t);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const auto& p1 = paths[i];
            const auto& p2 = paths[j];
            if (path_gain(g, p1).approx_equal(path_gain(g, p2))) continue;
            std::vector<char> internal(static_cast<std::size_t>(n), 0);
            for (std::size_t k = 1; k + 1 < p1.size(); ++k) {
                internal[static_cast<std::size_t>(p1[k])] = 1;
            }
            bool disjoint = true;
            for (std::size_t k = 1; k + 1 < p2.size(); ++k) {
                if (internal[static_cast<std::size_t>(p2[k])]) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            IncompatibilityWitness witness;
            witness.s = least.s;
            witness.t = least.t;
            witness.cycle = p1;
            for (std::size_t k = p2.size() - 2; k >= 1; --k) {
                witness.cycle.push_back(p2[k]);
            }
            return witness;
        }
    }
    throw NumericalError("no disjoint shortest-path pair found for a least-distance "
                         "incompatible pair");
}

}  // namespace gainspec
