#include "mci/enumeration.hpp"

#include <sstream>
#include <stdexcept>

namespace mci {

namespace {

Clock::time_point deadlineAfter(double seconds) {
    if (!(seconds < 1e9))
        return Clock::time_point::max();
    return Clock::now() +
           std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

}  // namespace

std::string writeSolutionSet(const SolutionSet& set) {
    std::ostringstream out;
    out << "c* " << set.optimalCost << " count " << set.size() << '\n';
    for (const auto& g : set.solutions)
        out << g.toString() << '\n';
    return out.str();
}

EnumerationContext::EnumerationContext(const Hypergraph& h, Strategy strategy, Clock::time_point deadline)
    : solver_(h, strategy), deadline_(deadline), first_(h.numVertices()) {
    auto run = solver_.run(deadline_);
    if (run.status == SolveStatus::TimedOut) {
        timedOut_ = true;
        return;
    }
    if (run.status != SolveStatus::Optimal)
        throw std::logic_error("MCI model infeasible; K(H) should always be feasible");
    first_ = *run.graph;
    cost_ = static_cast<std::int64_t>(first_.numEdges());

    Constraint costRow;
    for (std::size_t j = 0; j < solver_.edges().size(); ++j)
        costRow.terms.push_back({j, 1});
    costRow.sense = Sense::Equal;
    costRow.rhs = cost_;
    solver_.model().addConstraints({std::move(costRow)}, kCostGroup);
}

std::optional<SolutionGraph> EnumerationContext::next() {
    if (timedOut_)
        return std::nullopt;
    auto run = solver_.run(deadline_);
    if (run.status == SolveStatus::TimedOut) {
        timedOut_ = true;
        return std::nullopt;
    }
    if (run.status == SolveStatus::Infeasible)
        return std::nullopt;
    return run.graph;
}

void EnumerationContext::forbid(const SolutionGraph& g) {
    Constraint row;
    for (const auto& e : g.edges())
        row.terms.push_back({solver_.edges().var(e), 1});
    row.sense = Sense::LessEqual;
    row.rhs = static_cast<std::int64_t>(g.numEdges()) - 1;
    solver_.model().addConstraints({std::move(row)}, kForbidGroup);
    ++stats_.forbidConstraints;
}

EnumerationResult enumerateNaive(const Hypergraph& h, double timeLimit, Strategy strategy) {
    const auto start = Clock::now();
    EnumerationContext ctx(h, strategy, deadlineAfter(timeLimit));
    EnumerationResult result;
    if (!ctx.timedOut()) {
        result.set.optimalCost = ctx.optimalCost();
        std::optional<SolutionGraph> g = ctx.firstSolution();
        ctx.stats().outerIterations = 1;
        while (g) {
            result.set.solutions.insert(*g);
            ctx.forbid(*g);
            g = ctx.next();
            ++ctx.stats().outerIterations;
        }
    }
    result.set.complete = !ctx.timedOut();
    result.stats = ctx.stats();
    result.stats.finalConstraintCount = ctx.solver().model().numConstraints();
    result.stats.wallTime = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

SolutionSet exploreNeighborhood(const SolutionGraph& start, EnumerationContext& ctx) {
    SolutionSet neighborhood;
    neighborhood.optimalCost = ctx.optimalCost();
    neighborhood.solutions.insert(start);

    auto& model = ctx.solver().model();
    const auto& edges = ctx.solver().edges();
    std::set<Edge> forced;
    SolutionGraph current = start;
    for (;;) {
        const Edge* pick = nullptr;
        for (const auto& e : current.edges()) {
            if (!forced.contains(e)) {
                pick = &e;
                break;
            }
        }
        if (pick == nullptr)
            break;
        forced.insert(*pick);
        model.addConstraint({{edges.var(*pick), 1}}, Sense::Equal, 0, kNeighborhoodGroup);
        ++ctx.stats().chainSteps;

        auto g = ctx.next();
        if (!g)
            break;
        if (!ctx.found().contains(*g))
            neighborhood.solutions.insert(*g);
        current = std::move(*g);
    }
    model.retractGroup(kNeighborhoodGroup);
    neighborhood.complete = !ctx.timedOut();
    return neighborhood;
}

EnumerationResult enumerateChunked(const Hypergraph& h, double timeLimit, Strategy strategy) {
    const auto startTime = Clock::now();
    EnumerationContext ctx(h, strategy, deadlineAfter(timeLimit));
    EnumerationResult result;
    if (!ctx.timedOut()) {
        result.set.optimalCost = ctx.optimalCost();
        std::optional<SolutionGraph> s = ctx.firstSolution();
        ctx.stats().outerIterations = 1;
        while (s) {
            SolutionSet batch = exploreNeighborhood(*s, ctx);
            for (const auto& g : batch.solutions) {
                if (ctx.found().insert(g).second)
                    ctx.forbid(g);
            }
            if (ctx.timedOut())
                break;
            s = ctx.next();
            ++ctx.stats().outerIterations;
        }
        result.set.solutions = ctx.found();
    }
    result.set.complete = !ctx.timedOut();
    result.stats = ctx.stats();
    result.stats.finalConstraintCount = ctx.solver().model().numConstraints();
    result.stats.wallTime = std::chrono::duration<double>(Clock::now() - startTime).count();
    return result;
}

}  // namespace mci
