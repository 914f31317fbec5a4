#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "mci/linear_model.hpp"

namespace mci {

using Clock = std::chrono::steady_clock;

enum class SolveStatus { Optimal, Infeasible, TimedOut };

const char* toString(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    /// Optimal assignment, or the best incumbent when timed out (may be empty).
    std::vector<int> assignment;
    std::int64_t objective = 0;
    /// Lower bound proven at the root; equals objective when Optimal.
    std::int64_t bestBound = std::numeric_limits<std::int64_t>::min();
    std::uint64_t nodes = 0;
};

/// What the search should do with an integral node.
struct LeafVerdict {
    enum class Kind { Accept, Prune, Branch };
    Kind kind = Kind::Accept;
    std::size_t var = 0;  // for Branch: a variable whose bounds are not yet fixed

    static LeafVerdict accept() { return {Kind::Accept, 0}; }
    static LeafVerdict prune() { return {Kind::Prune, 0}; }
    static LeafVerdict branch(std::size_t v) { return {Kind::Branch, v}; }
};

/**
 * Optional combinatorial hooks. `viable` sees the current variable bounds and
 * may cut a node before its relaxation is solved; `leaf` may reject an
 * integral relaxation optimum that the linear constraints alone accept.
 */
struct SolveHooks {
    std::function<bool(std::span<const int> lower, std::span<const int> upper)> viable;
    std::function<LeafVerdict(std::span<const int> assignment, std::span<const int> lower,
                              std::span<const int> upper)>
        leaf;
};

struct SolveOptions {
    double timeLimit = std::numeric_limits<double>::infinity();
    /// Overrides timeLimit when set.
    std::optional<Clock::time_point> deadline;
    SolveHooks hooks;
    bool useHint = true;
};

/**
 * Exact depth-first branch-and-bound over the binary variables of `model`.
 * Node bounds come from the linear relaxation (dual simplex, Bland's rule);
 * the branching variable is the lowest-index fractional one, value 1 first.
 * Ties between equal-cost leaves go to the first one reached.
 *
 * On Optimal the assignment is stored as the model's hint. Throws
 * std::logic_error for models with continuous variables.
 */
SolveOutcome solve(LinearModel& model, const SolveOptions& options = {});

}  // namespace mci
