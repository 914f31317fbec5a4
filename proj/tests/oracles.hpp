#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// solver code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mci/hypergraph.hpp"
#include "mci/linear_model.hpp"

namespace mci::oracle {

/// Edges of K(H), computed independently with a pair matrix.
inline std::vector<std::pair<int, int>> supportPairs(const Hypergraph& h) {
    const int n = h.numVertices();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n + 1), std::vector<char>(static_cast<std::size_t>(n + 1), 0));
    for (const auto& s : h.hyperedges())
        for (int u : s)
            for (int v : s)
                if (u < v)
                    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                pairs.emplace_back(u, v);
    return pairs;
}

/// Connectivity of every hyperedge given vertex-bitmask adjacency, by
/// repeated neighborhood expansion. Needs n <= 62.
inline bool feasibleAdjacency(const Hypergraph& h, const std::vector<std::uint64_t>& nbr) {
    const int n = h.numVertices();
    for (const auto& s : h.hyperedges()) {
        if (s.empty())
            continue;
        std::uint64_t members = 0;
        for (int v : s)
            members |= std::uint64_t{1} << v;
        std::uint64_t reached = std::uint64_t{1} << s.front();
        for (;;) {
            std::uint64_t grow = reached;
            for (int v = 1; v <= n; ++v)
                if ((reached >> v) & 1)
                    grow |= nbr[static_cast<std::size_t>(v)] & members;
            if (grow == reached)
                break;
            reached = grow;
        }
        if (reached != members)
            return false;
    }
    return true;
}

/// Edge subset given as a bitmask over `pairs` (at most 64 pairs).
inline bool feasibleMask(const Hypergraph& h, const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask) {
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(h.numVertices() + 1), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!((mask >> i) & 1))
            continue;
        auto [u, v] = pairs[i];
        nbr[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return feasibleAdjacency(h, nbr);
}

/// Edge subset given as a plain list; any size.
inline bool feasibleEdges(const Hypergraph& h, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(h.numVertices() + 1), 0);
    for (auto [u, v] : edges) {
        nbr[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return feasibleAdjacency(h, nbr);
}

/// Calls f(mask) for every k-subset of [0, count) in increasing mask order.
template <typename F>
void forEachSubset(std::size_t count, std::size_t k, F&& f) {
    if (k == 0) {
        f(std::uint64_t{0});
        return;
    }
    if (k > count)
        return;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << count;
    while (mask < limit) {
        if (!f(mask))
            return;
        // Gosper's hack
        std::uint64_t c = mask & (~mask + 1);
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

/// Smallest k such that some k-subset of K(H)'s edges is feasible.
inline int bruteForceMinCost(const Hypergraph& h) {
    auto pairs = supportPairs(h);
    for (std::size_t k = 0; k <= pairs.size(); ++k) {
        bool found = false;
        forEachSubset(pairs.size(), k, [&](std::uint64_t mask) {
            if (feasibleMask(h, pairs, mask)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found)
            return static_cast<int>(k);
    }
    return -1;
}

/// Every feasible edge set of minimum size.
inline std::set<SolutionGraph> bruteForceOptimalSet(const Hypergraph& h) {
    auto pairs = supportPairs(h);
    int best = bruteForceMinCost(h);
    std::set<SolutionGraph> out;
    forEachSubset(pairs.size(), static_cast<std::size_t>(best), [&](std::uint64_t mask) {
        if (feasibleMask(h, pairs, mask)) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1)
                    edges.emplace_back(pairs[i].first, pairs[i].second);
            out.emplace(h.numVertices(), std::move(edges));
        }
        return true;
    });
    return out;
}

inline bool holds(const LinearModel& model, const std::vector<int>& x) {
    for (const auto& c : model.constraints()) {
        std::int64_t lhs = 0;
        for (const auto& t : c.terms)
            lhs += t.coef * x[t.var];
        if (c.sense == Sense::GreaterEqual && lhs < c.rhs)
            return false;
        if (c.sense == Sense::LessEqual && lhs > c.rhs)
            return false;
        if (c.sense == Sense::Equal && lhs != c.rhs)
            return false;
    }
    return true;
}

/// Minimum objective over all 0-1 assignments, nullopt if none is feasible.
inline std::optional<std::int64_t> exhaustiveOptimum(const LinearModel& model) {
    const std::size_t k = model.numVariables();
    std::optional<std::int64_t> best;
    std::vector<int> x(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::int64_t obj = 0;
        for (std::size_t j = 0; j < k; ++j) {
            x[j] = static_cast<int>((mask >> j) & 1);
            obj += x[j] * model.variables()[j].objective;
        }
        if ((!best || obj < *best) && holds(model, x))
            best = obj;
    }
    return best;
}

/// Smallest achievable larger side when splitting whole items in two.
inline int optimalLargerSide(const std::vector<int>& sizes) {
    int total = 0;
    for (int s : sizes)
        total += s;
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t mask = 0; mask < (1u << sizes.size()); ++mask) {
        int a = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            if ((mask >> i) & 1)
                a += sizes[i];
        best = std::min(best, std::max(a, total - a));
    }
    return best;
}

}  // namespace mci::oracle
