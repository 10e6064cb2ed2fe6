#include "gainspec/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace gainspec {

namespace detail {

namespace {
std::pair<long long, long long> bucket_key(Complex z) {
    return {std::llround(z.real() / kGainEps), std::llround(z.imag() / kGainEps)};
}
}  // namespace

bool GainSetAccumulator::contains(Complex z) const {
    const auto key = bucket_key(z);
    for (long long dr = -1; dr <= 1; ++dr) {
        for (long long di = -1; di <= 1; ++di) {
            auto it = buckets_.find({key.first + dr, key.second + di});
            if (it == buckets_.end()) continue;
            for (int idx : it->second) {
                if (std::abs(values_[static_cast<std::size_t>(idx)] - z) <= kGainEps) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool GainSetAccumulator::insert(Complex z) {
    if (contains(z)) return false;
    buckets_[bucket_key(z)].push_back(static_cast<int>(values_.size()));
    values_.push_back(z);
    return true;
}

}  // namespace detail

std::vector<int> bfs_distances(const GainGraph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n) throw DimensionError("source vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    for (int d : dist) {
        if (d < 0) throw ConnectivityError("graph is not connected");
    }
    return dist;
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, bool& saturated) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (a > kMax - b) {
        saturated = true;
        return kMax;
    }
    return a + b;
}

}  // namespace

std::vector<ShortestPathGainSet> gain_sets_from(const GainGraph& g, int source) {
    const auto dist = bfs_distances(g, source);
    const int n = g.order();

    std::vector<int> by_dist(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_dist[static_cast<std::size_t>(v)] = v;
    std::sort(by_dist.begin(), by_dist.end(), [&](int a, int b) {
        return std::pair(dist[static_cast<std::size_t>(a)], a) <
               std::pair(dist[static_cast<std::size_t>(b)], b);
    });

    std::vector<detail::GainSetAccumulator> sets(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    std::vector<char> saturated(static_cast<std::size_t>(n), 0);
    sets[static_cast<std::size_t>(source)].insert(Complex(1.0, 0.0));
    counts[static_cast<std::size_t>(source)] = 1;

    for (int v : by_dist) {
        if (v == source) continue;
        bool sat = false;
        for (int u : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(u)] + 1 != dist[static_cast<std::size_t>(v)]) {
                continue;
            }
            const Complex step = g.gain(u, v).value();
            for (const Complex& x : sets[static_cast<std::size_t>(u)].values()) {
                sets[static_cast<std::size_t>(v)].insert(x * step);
            }
            counts[static_cast<std::size_t>(v)] = saturating_add(
                counts[static_cast<std::size_t>(v)], counts[static_cast<std::size_t>(u)], sat);
            if (saturated[static_cast<std::size_t>(u)]) sat = true;
        }
        saturated[static_cast<std::size_t>(v)] = sat ? 1 : 0;
    }

    std::vector<ShortestPathGainSet> result(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        auto& r = result[static_cast<std::size_t>(t)];
        r.source = source;
        r.target = t;
        r.dist = dist[static_cast<std::size_t>(t)];
        r.path_count = counts[static_cast<std::size_t>(t)];
        r.count_saturated = saturated[static_cast<std::size_t>(t)] != 0;
        std::vector<Complex> gains = sets[static_cast<std::size_t>(t)].values();
        std::sort(gains.begin(), gains.end(), [](const Complex& a, const Complex& b) {
            return std::pair(a.real(), a.imag()) > std::pair(b.real(), b.imag());
        });
        r.gains.reserve(gains.size());
        for (const Complex& z : gains) r.gains.push_back(UnitGain(z));
    }
    return result;
}

ShortestPathGainSet shortest_gain_set(const GainGraph& g, int s, int t) {
    auto all = gain_sets_from(g, s);
    if (t < 0 || t >= g.order()) throw DimensionError("target vertex out of range");
    return all[static_cast<std::size_t>(t)];
}

std::vector<std::vector<int>> enumerate_shortest_paths(const GainGraph& g, int s, int t,
                                                       std::uint64_t cap) {
    if (cap == 0) throw PreconditionError("path cap must be positive");
    const auto dist_s = bfs_distances(g, s);
    const auto dist_t = bfs_distances(g, t);
    const int target_len = dist_s[static_cast<std::size_t>(t)];

    std::vector<std::vector<int>> paths;
    std::vector<int> current{s};
    // DFS over DAG edges that stay on some shortest s -> t path.
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == t) {
            if (paths.size() >= cap) {
                throw ExplosionError("shortest path count exceeds cap");
            }
            paths.push_back(current);
            return;
        }
        for (int w : g.neighbors(v)) {
            if (dist_s[static_cast<std::size_t>(w)] != dist_s[static_cast<std::size_t>(v)] + 1) {
                continue;
            }
            if (dist_s[static_cast<std::size_t>(w)] + dist_t[static_cast<std::size_t>(w)] !=
                target_len) {
                continue;
            }
            current.push_back(w);
            self(self, w);
            current.pop_back();
        }
    };
    dfs(dfs, s);
    return paths;
}

bool is_geodetic(const GainGraph& g) {
    const int n = g.order();
    for (int s = 0; s < n; ++s) {
        const auto dist = bfs_distances(g, s);
        std::vector<int> by_dist(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) by_dist[static_cast<std::size_t>(v)] = v;
        std::sort(by_dist.begin(), by_dist.end(), [&](int a, int b) {
            return std::pair(dist[static_cast<std::size_t>(a)], a) <
                   std::pair(dist[static_cast<std::size_t>(b)], b);
        });
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
        counts[static_cast<std::size_t>(s)] = 1;
        bool sat = false;
        for (int v : by_dist) {
            if (v == s) continue;
            for (int u : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(u)] + 1 == dist[static_cast<std::size_t>(v)]) {
                    counts[static_cast<std::size_t>(v)] = saturating_add(
                        counts[static_cast<std::size_t>(v)],
                        counts[static_cast<std::size_t>(u)], sat);
                }
            }
            if (sat || counts[static_cast<std::size_t>(v)] != 1) return false;
        }
    }
    return true;
}

}  // namespace gainspec
