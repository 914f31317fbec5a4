#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mci/cut_generation.hpp"
#include "mci/hypergraph.hpp"
#include "mci/linear_model.hpp"

namespace mci {

inline const std::string kConservationGroup = "conservation";
inline const std::string kCapacityGroup = "capacity";

/**
 * Single-commodity flow formulation of MCI. For every hyperedge S with root
 * r_S (its smallest vertex) there is a continuous f on each arc of the
 * complete digraph on S, and
 *
 *   (i)   sum_{u,v in S} x_uv >= |S| - 1
 *   (ii)  inflow(v) - outflow(v) = -1            for v in S \ {r_S}
 *   (iii) f_uv + f_vu <= (|S| - 1) x_uv          for {u,v} in S
 *   (iv)  f >= 0                                  (variable bounds)
 *
 * so every non-root vertex ships one unit that ends at the root.
 */
struct FlowModel {
    LinearModel model;  // x_u_v binaries first, then f_S<k>_<u>_<v>
    std::vector<Vertex> roots;  // 0 for an empty hyperedge
    std::size_t binaryCount = 0;
    std::size_t flowCount = 0;
    std::size_t spanningRows = 0;
    std::size_t conservationRows = 0;
    std::size_t capacityRows = 0;
};

std::string flowVariableName(std::size_t hyperedge, Vertex from, Vertex to);

FlowModel buildFlowModel(const Hypergraph& h);

/// Rows of families (i)-(iii); nonnegativity bounds are not counted.
std::int64_t flowConstraintCount(const Hypergraph& h);

/// Flow per arc (from, to) of the complete digraph on a hyperedge.
using ArcFlows = std::map<std::pair<Vertex, Vertex>, std::int64_t>;

/**
 * Flow proving that g[s] is connected: a BFS tree of g[s] oriented toward
 * root, each child-to-parent arc carrying the child's subtree size, every
 * other arc 0. Returns nullopt when g[s] is disconnected.
 * Throws std::invalid_argument if root is not in s.
 */
std::optional<ArcFlows> flowWitness(const SolutionGraph& g, std::span<const Vertex> s, Vertex root);

/// Evaluates (ii)-(iv) for one hyperedge with x read off g.
bool satisfiesFlowConstraints(const SolutionGraph& g, std::span<const Vertex> s, Vertex root,
                              const ArcFlows& flows);

/**
 * Exact baseline: branch-and-bound on the x variables only. A node is cut
 * when some hyperedge is disconnected by the edges still allowed (the flow
 * relaxation has no solution there), bounds come from the relaxation of
 * family (i), and an integral node is accepted iff every g[S] is connected,
 * which is exactly when flowWitness finds a flow.
 */
MciResult solveFlowBaseline(const Hypergraph& h,
                            double timeLimit = std::numeric_limits<double>::infinity());

}  // namespace mci
