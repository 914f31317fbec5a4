#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "mci/cut_generation.hpp"
#include "mci/hypergraph.hpp"

namespace mci {

/// All optimal solutions found for an instance, in canonical order.
struct SolutionSet {
    std::int64_t optimalCost = 0;
    std::set<SolutionGraph> solutions;
    bool complete = true;

    std::size_t size() const { return solutions.size(); }
};

/// "c* <cost> count <k>" then one solution per line as sorted "u-v" tokens.
std::string writeSolutionSet(const SolutionSet& set);

struct EnumerationStats {
    std::size_t outerIterations = 0;
    std::size_t chainSteps = 0;
    std::size_t forbidConstraints = 0;
    std::size_t finalConstraintCount = 0;
    double wallTime = 0.0;
};

inline const std::string kCostGroup = "cost";
inline const std::string kForbidGroup = "forbid";
inline const std::string kNeighborhoodGroup = "neighborhood";

/**
 * Shared state of an enumeration run: a constraint generation solver whose
 * model carries the cost-equality row sum x = c* plus solution-forbidding
 * rows. Construction solves the instance once to fix c*.
 */
class EnumerationContext {
public:
    EnumerationContext(const Hypergraph& h, Strategy strategy, Clock::time_point deadline);

    std::int64_t optimalCost() const { return cost_; }
    const SolutionGraph& firstSolution() const { return first_; }

    /// Next cost-c* solution satisfying every active row, or nullopt when
    /// none is left or the deadline passed (see timedOut()).
    std::optional<SolutionGraph> next();

    /// Adds sum_{e in g} x_e <= |g| - 1 under the forbid group.
    void forbid(const SolutionGraph& g);

    bool timedOut() const { return timedOut_; }
    CutGenerationSolver& solver() { return solver_; }
    EnumerationStats& stats() { return stats_; }
    /// Solutions collected so far (the set A).
    std::set<SolutionGraph>& found() { return found_; }

private:
    CutGenerationSolver solver_;
    Clock::time_point deadline_;
    std::int64_t cost_ = 0;
    SolutionGraph first_;
    bool timedOut_ = false;
    EnumerationStats stats_;
    std::set<SolutionGraph> found_;
};

struct EnumerationResult {
    SolutionSet set;
    EnumerationStats stats;
};

/// Forbid each solution as soon as it is found, re-solve until infeasible.
EnumerationResult enumerateNaive(const Hypergraph& h,
                                 double timeLimit = std::numeric_limits<double>::infinity(),
                                 Strategy strategy = Strategy::fromNumber(4));

/**
 * Chain of edge-forbidding steps from `start`: forbid the smallest edge of the
 * current solution (x_e = 0, kept for the rest of the chain), re-solve at cost
 * c*, continue from the new solution until none exists. Returns every
 * solution met, start included. The scoped rows are retracted before return.
 */
SolutionSet exploreNeighborhood(const SolutionGraph& start, EnumerationContext& ctx);

/// Find a solution outside A, collect its neighborhood, forbid the whole
/// batch at once, repeat.
EnumerationResult enumerateChunked(const Hypergraph& h,
                                   double timeLimit = std::numeric_limits<double>::infinity(),
                                   Strategy strategy = Strategy::fromNumber(4));

}  // namespace mci
