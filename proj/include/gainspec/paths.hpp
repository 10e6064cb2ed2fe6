#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gainspec/core.hpp"

namespace gainspec {

/// The distinct gains realized by shortest paths from source to target,
/// together with the hop distance and the number of shortest paths.
struct ShortestPathGainSet {
    int source = 0;
    int target = 0;
    int dist = 0;
    // Pairwise distinct under kGainEps, sorted by (Re, Im) descending.
    std::vector<UnitGain> gains;
    std::uint64_t path_count = 0;
    // Path counts use saturating 64-bit arithmetic; set when they overflowed.
    bool count_saturated = false;
};

/// Exact hop distances from `source`. Throws ConnectivityError when some
/// vertex is unreachable.
std::vector<int> bfs_distances(const GainGraph& g, int source);

/// Gain sets from `source` to every vertex in one pass: dynamic programming
/// over the shortest-path DAG, propagating deduplicated gain sets. No gain
/// is pruned; Re of a product is not monotone under unit multiplication.
std::vector<ShortestPathGainSet> gain_sets_from(const GainGraph& g, int source);

ShortestPathGainSet shortest_gain_set(const GainGraph& g, int s, int t);

/// All shortest s -> t paths as vertex sequences, DFS over the shortest-path
/// DAG in ascending neighbor order. Throws ExplosionError past `cap`.
std::vector<std::vector<int>> enumerate_shortest_paths(const GainGraph& g, int s, int t,
                                                       std::uint64_t cap = 1000000);

/// True iff every ordered pair has exactly one shortest path.
bool is_geodetic(const GainGraph& g);

namespace detail {

/// Deduplicating accumulator for unit gains: kGainEps grid bucketing on
/// (Re, Im) with a distance re-check across neighboring buckets.
class GainSetAccumulator {
public:
    // Returns true when z was new.
    bool insert(Complex z);
    bool contains(Complex z) const;
    const std::vector<Complex>& values() const { return values_; }

private:
    std::vector<Complex> values_;
    std::map<std::pair<long long, long long>, std::vector<int>> buckets_;
};

}  // namespace detail

}  // namespace gainspec
