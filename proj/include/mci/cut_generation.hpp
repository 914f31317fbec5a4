#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mci/hypergraph.hpp"
#include "mci/linear_model.hpp"
#include "mci/solver.hpp"

namespace mci {

/**
 * Ordered family (X_1, ..., X_r), r >= 2, of disjoint nonempty vertex sets
 * inside one hyperedge. Its constraint asks for at least r - 1 solution edges
 * between distinct parts, which forbids the parts from being the connected
 * components of the hyperedge.
 *
 * Construction canonicalizes: each part sorted, parts ordered by smallest
 * member. Two cuts with the same parts compare equal whatever hyperedge they
 * came from.
 */
class Cut {
public:
    /// Throws std::invalid_argument unless r >= 2 and parts are nonempty and disjoint.
    Cut(std::size_t hyperedgeIndex, std::vector<VertexSet> parts);

    std::size_t hyperedgeIndex() const { return hyperedge_; }
    const std::vector<VertexSet>& parts() const { return parts_; }
    std::size_t arity() const { return parts_.size(); }

    std::string toString() const;

    bool operator==(const Cut& o) const { return parts_ == o.parts_; }
    bool operator<(const Cut& o) const { return parts_ < o.parts_; }

private:
    std::size_t hyperedge_ = 0;
    std::vector<VertexSet> parts_;
};

/// E(C): every pair joining two distinct parts, sorted.
std::vector<Edge> crossingPairs(const Cut& c);

/// ({v}, S \ {v}) for every hyperedge S with |S| >= 2 and every v in S,
/// deduplicated, in first-seen order.
std::vector<Cut> singletonCuts(const Hypergraph& h);

struct Bipartition {
    VertexSet a;
    VertexSet b;
};

/**
 * Greedy balanced bipartition of whole components: components go by
 * decreasing size (ties by smallest member) to A when |A| < |B|, else to B.
 * Throws std::invalid_argument for fewer than two components.
 */
Bipartition greedyBalancedBipartition(const std::vector<VertexSet>& components);

/// Cut separation policy applied to a disconnected hyperedge.
enum class Routine { Bipartition = 1, EachComponent = 2, AllComponents = 3 };

struct Strategy {
    bool useSingletonInit = true;
    Routine routine = Routine::Bipartition;

    /// Strategies 1-3: no initial cuts; 4-6: singleton cuts. Routine = 1, 2, 3 cyclically.
    static Strategy fromNumber(int number);
    int number() const;

    bool operator==(const Strategy&) const = default;
};

/// New cuts for a hyperedge whose solution subgraph has the given components.
/// Throws std::invalid_argument for fewer than two components.
std::vector<Cut> routineCuts(Routine routine, std::size_t hyperedgeIndex,
                             const std::vector<VertexSet>& components);

/// Sum over hyperedges of 2^(|S|-1) - 1; saturates at INT64_MAX.
std::int64_t bipartitionCutCount(const Hypergraph& h);

/// Edge <-> variable bookkeeping for models over K(H).
class EdgeIndex {
public:
    explicit EdgeIndex(const Hypergraph& h);

    const SolutionGraph& support() const { return support_; }
    std::size_t size() const { return support_.numEdges(); }
    const Edge& edge(std::size_t var) const { return support_.edges()[var]; }
    /// Throws std::out_of_range if e is not an edge of K(H).
    std::size_t var(const Edge& e) const;
    std::optional<std::size_t> find(const Edge& e) const;

    SolutionGraph toGraph(const std::vector<int>& assignment) const;
    std::vector<int> toAssignment(const SolutionGraph& g) const;

    static std::string variableName(const Edge& e);

private:
    SolutionGraph support_;
    std::map<Edge, std::size_t> index_;
};

/// Constraint of a cut: sum of crossing variables >= r - 1.
Constraint cutConstraint(const Cut& c, const EdgeIndex& edges);

/// Spanning constraints (one per hyperedge: edges inside S >= |S| - 1).
Constraint spanningConstraint(const VertexSet& s, const EdgeIndex& edges);

inline const std::string kSpanningGroup = "spanning";
inline const std::string kCutGroup = "cuts";

/// Model with a binary x_u_v per K(H) edge, objective sum x, spanning
/// constraints and one constraint per distinct cut of the pool.
LinearModel buildModel(const Hypergraph& h, const std::vector<Cut>& cuts);

struct RunStats {
    std::size_t iterations = 0;
    std::size_t finalConstraintCount = 0;
    std::size_t solverCalls = 0;
    std::uint64_t nodes = 0;
    double wallTime = 0.0;
    bool timedOut = false;
    /// Objective of each solver call, in order.
    std::vector<std::int64_t> objectiveTrace;
};

struct MciResult {
    SolutionGraph graph;
    RunStats stats;
    bool feasible = false;
};

/**
 * Constraint generation for MCI. Owns the model and the cut pool so that
 * callers can add their own constraint groups (enumeration) and re-run the
 * loop; cuts found in one run stay in the pool for the next.
 */
class CutGenerationSolver {
public:
    CutGenerationSolver(const Hypergraph& h, Strategy strategy);

    struct Run {
        SolveStatus status = SolveStatus::Infeasible;
        std::optional<SolutionGraph> graph;  // feasible when Optimal; best incumbent on time-out
    };

    /// Solve / separate / re-solve until the incumbent is feasible, the model
    /// becomes infeasible or the deadline passes. Updates stats().
    Run run(Clock::time_point deadline);

    const Hypergraph& hypergraph() const { return h_; }
    const EdgeIndex& edges() const { return edges_; }
    LinearModel& model() { return model_; }
    const LinearModel& model() const { return model_; }
    const std::set<Cut>& pool() const { return pool_; }
    const RunStats& stats() const { return stats_; }
    Strategy strategy() const { return strategy_; }

    /// Adds cuts not yet in the pool; returns how many were new.
    std::size_t addCuts(const std::vector<Cut>& cuts);

private:
    Hypergraph h_;
    Strategy strategy_;
    EdgeIndex edges_;
    LinearModel model_;
    std::set<Cut> pool_;
    RunStats stats_;
};

/// Minimum MCI solution by constraint generation (default: Strategy 4).
MciResult solveMCI(const Hypergraph& h, Strategy strategy = Strategy::fromNumber(4),
                   double timeLimit = std::numeric_limits<double>::infinity());

inline constexpr std::int64_t kBipartitionGuard = 100000;

/// Solves the model holding every bipartition cut of every hyperedge.
/// Throws std::length_error when bipartitionCutCount(h) exceeds kBipartitionGuard.
MciResult fullBipartitionOracle(const Hypergraph& h,
                                double timeLimit = std::numeric_limits<double>::infinity());

/// Every bipartition cut of every hyperedge, deduplicated.
std::vector<Cut> allBipartitionCuts(const Hypergraph& h);

}  // namespace mci
