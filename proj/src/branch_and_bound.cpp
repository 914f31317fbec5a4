#include <cmath>
#include <stdexcept>

#include "dual_simplex.hpp"
#include "mci/solver.hpp"

namespace mci {

const char* toString(SolveStatus s) {
    switch (s) {
    case SolveStatus::Optimal:
        return "optimal";
    case SolveStatus::Infeasible:
        return "infeasible";
    case SolveStatus::TimedOut:
        return "timed-out";
    }
    return "?";
}

namespace {

constexpr double kIntegralityTol = 1e-6;
constexpr double kBoundTol = 1e-6;

class Search {
public:
    Search(const LinearModel& model, std::span<const Constraint> rows, std::span<const double> cost,
           const SolveOptions& options, Clock::time_point deadline)
        : model_(model),
          options_(options),
          deadline_(deadline),
          lp_(cost, rows),
          lower_(model.numVariables(), 0),
          upper_(model.numVariables(), 1) {}

    void seedIncumbent(std::vector<int> assignment, std::int64_t objective) {
        incumbent_ = std::move(assignment);
        incumbentObjective_ = objective;
    }

    void run() { node(0); }

    bool timedOut() const { return timedOut_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::optional<std::vector<int>>& incumbent() const { return incumbent_; }
    std::int64_t incumbentObjective() const { return incumbentObjective_; }
    std::optional<std::int64_t> rootBound() const { return rootBound_; }

private:
    void node(std::size_t depth) {
        if (timedOut_)
            return;
        ++nodes_;
        if ((nodes_ & 63) == 0 && Clock::now() >= deadline_) {
            timedOut_ = true;
            return;
        }
        if (options_.hooks.viable && !options_.hooks.viable(lower_, upper_))
            return;

        if (lp_.solve() == detail::DualSimplex::Result::Infeasible)
            return;
        const auto bound = static_cast<std::int64_t>(std::ceil(lp_.objective() - kBoundTol));
        if (depth == 0)
            rootBound_ = bound;
        if (incumbent_ && bound >= incumbentObjective_)
            return;

        const std::size_t n = model_.numVariables();
        std::size_t branchVar = n;
        for (std::size_t j = 0; j < n; ++j) {
            double v = lp_.value(j);
            if (std::abs(v - std::round(v)) > kIntegralityTol) {
                branchVar = j;
                break;
            }
        }

        if (branchVar == n) {
            std::vector<int> assignment(n);
            for (std::size_t j = 0; j < n; ++j)
                assignment[j] = static_cast<int>(std::lround(lp_.value(j)));
            if (!model_.satisfies(assignment)) {
                // rounding drift: fall back to any free variable
                branchVar = firstFree();
                if (branchVar == n)
                    return;
            } else {
                LeafVerdict verdict = LeafVerdict::accept();
                if (options_.hooks.leaf)
                    verdict = options_.hooks.leaf(assignment, lower_, upper_);
                if (verdict.kind == LeafVerdict::Kind::Prune)
                    return;
                if (verdict.kind == LeafVerdict::Kind::Accept) {
                    incumbentObjective_ = model_.objectiveValue(assignment);
                    incumbent_ = std::move(assignment);
                    return;
                }
                branchVar = verdict.var;
                if (branchVar >= n || lower_[branchVar] == upper_[branchVar])
                    throw std::logic_error("leaf hook asked to branch on a fixed variable");
            }
        }

        for (int value : {1, 0}) {
            const int savedLo = lower_[branchVar];
            const int savedHi = upper_[branchVar];
            lower_[branchVar] = upper_[branchVar] = value;
            lp_.setBounds(branchVar, value, value);
            node(depth + 1);
            lower_[branchVar] = savedLo;
            upper_[branchVar] = savedHi;
            lp_.setBounds(branchVar, savedLo, savedHi);
            if (timedOut_)
                return;
        }
    }

    std::size_t firstFree() const {
        for (std::size_t j = 0; j < lower_.size(); ++j)
            if (lower_[j] != upper_[j])
                return j;
        return lower_.size();
    }

    const LinearModel& model_;
    const SolveOptions& options_;
    Clock::time_point deadline_;
    detail::DualSimplex lp_;
    std::vector<int> lower_;
    std::vector<int> upper_;
    std::optional<std::vector<int>> incumbent_;
    std::int64_t incumbentObjective_ = 0;
    std::optional<std::int64_t> rootBound_;
    std::uint64_t nodes_ = 0;
    bool timedOut_ = false;
};

Clock::time_point deadlineFor(const SolveOptions& options) {
    if (options.deadline)
        return *options.deadline;
    if (!std::isfinite(options.timeLimit) || options.timeLimit > 1e9)
        return Clock::time_point::max();
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(options.timeLimit));
}

}  // namespace

SolveOutcome solve(LinearModel& model, const SolveOptions& options) {
    if (model.hasContinuous())
        throw std::logic_error("internal solver handles binary variables only; export the model instead");

    const auto deadline = deadlineFor(options);
    SolveOutcome outcome;

    std::vector<Constraint> rows;
    rows.reserve(model.numConstraints());
    for (const auto& c : model.constraints()) {
        bool empty = true;
        for (const auto& t : c.terms)
            empty = empty && t.coef == 0;
        if (!empty) {
            rows.push_back(c);
            continue;
        }
        bool ok = c.sense == Sense::GreaterEqual ? 0 >= c.rhs
                  : c.sense == Sense::LessEqual  ? 0 <= c.rhs
                                                 : c.rhs == 0;
        if (!ok) {
            outcome.status = SolveStatus::Infeasible;
            return outcome;
        }
    }

    std::vector<double> cost;
    cost.reserve(model.numVariables());
    for (const auto& v : model.variables())
        cost.push_back(static_cast<double>(v.objective));

    Search search(model, rows, cost, options, deadline);

    const auto& hint = model.hint();
    if (options.useHint && model.satisfies(hint)) {
        std::vector<int> all0(model.numVariables(), 0), all1(model.numVariables(), 1);
        bool accepted = !options.hooks.leaf ||
                        options.hooks.leaf(hint, all0, all1).kind == LeafVerdict::Kind::Accept;
        if (accepted)
            search.seedIncumbent(hint, model.objectiveValue(hint));
    }

    search.run();

    outcome.nodes = search.nodes();
    if (search.rootBound())
        outcome.bestBound = *search.rootBound();
    if (search.incumbent()) {
        outcome.assignment = *search.incumbent();
        outcome.objective = search.incumbentObjective();
    }
    if (search.timedOut()) {
        outcome.status = SolveStatus::TimedOut;
        return outcome;
    }
    if (!search.incumbent()) {
        outcome.status = SolveStatus::Infeasible;
        return outcome;
    }
    outcome.status = SolveStatus::Optimal;
    outcome.bestBound = outcome.objective;
    model.setHint(outcome.assignment);
    return outcome;
}

}  // namespace mci
