#include "mci/cut_generation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mci {

Cut::Cut(std::size_t hyperedgeIndex, std::vector<VertexSet> parts)
    : hyperedge_(hyperedgeIndex), parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw std::invalid_argument("a cut needs at least two parts");
    VertexSet all;
    for (auto& p : parts_) {
        if (p.empty())
            throw std::invalid_argument("cut part is empty");
        std::sort(p.begin(), p.end());
        all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("cut parts overlap");
    std::sort(parts_.begin(), parts_.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
}

std::string Cut::toString() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ", ";
        out += '{';
        for (std::size_t k = 0; k < parts_[i].size(); ++k) {
            if (k)
                out += ',';
            out += std::to_string(parts_[i][k]);
        }
        out += '}';
    }
    return out + ")";
}

std::vector<Edge> crossingPairs(const Cut& c) {
    std::vector<Edge> pairs;
    const auto& parts = c.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (Vertex u : parts[i])
                for (Vertex v : parts[j])
                    pairs.emplace_back(u, v);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<Cut> singletonCuts(const Hypergraph& h) {
    std::vector<Cut> cuts;
    std::set<Cut> seen;
    for (std::size_t i = 0; i < h.numHyperedges(); ++i) {
        const auto& s = h.hyperedge(i);
        if (s.size() < 2)
            continue;
        for (Vertex v : s) {
            VertexSet rest;
            for (Vertex u : s)
                if (u != v)
                    rest.push_back(u);
            Cut c(i, {{v}, std::move(rest)});
            if (seen.insert(c).second)
                cuts.push_back(std::move(c));
        }
    }
    return cuts;
}

Bipartition greedyBalancedBipartition(const std::vector<VertexSet>& components) {
    if (components.size() < 2)
        throw std::invalid_argument("bipartition needs at least two components");
    std::vector<const VertexSet*> order;
    for (const auto& c : components) {
        if (c.empty())
            throw std::invalid_argument("empty component");
        order.push_back(&c);
    }
    std::stable_sort(order.begin(), order.end(), [](const VertexSet* a, const VertexSet* b) {
        if (a->size() != b->size())
            return a->size() > b->size();
        return *std::min_element(a->begin(), a->end()) < *std::min_element(b->begin(), b->end());
    });

    Bipartition out;
    for (const VertexSet* c : order) {
        auto& side = out.a.size() < out.b.size() ? out.a : out.b;
        side.insert(side.end(), c->begin(), c->end());
    }
    std::sort(out.a.begin(), out.a.end());
    std::sort(out.b.begin(), out.b.end());
    return out;
}

Strategy Strategy::fromNumber(int number) {
    if (number < 1 || number > 6)
        throw std::invalid_argument("strategy must be in 1..6, got " + std::to_string(number));
    return Strategy{number >= 4, static_cast<Routine>((number - 1) % 3 + 1)};
}

int Strategy::number() const {
    return (useSingletonInit ? 3 : 0) + static_cast<int>(routine);
}

std::vector<Cut> routineCuts(Routine routine, std::size_t hyperedgeIndex,
                             const std::vector<VertexSet>& components) {
    if (components.size() < 2)
        throw std::invalid_argument("hyperedge is connected; no cut to separate");
    std::vector<Cut> cuts;
    switch (routine) {
    case Routine::Bipartition: {
        auto [a, b] = greedyBalancedBipartition(components);
        cuts.emplace_back(hyperedgeIndex, std::vector<VertexSet>{std::move(a), std::move(b)});
        break;
    }
    case Routine::EachComponent:
        for (std::size_t i = 0; i < components.size(); ++i) {
            VertexSet rest;
            for (std::size_t j = 0; j < components.size(); ++j)
                if (j != i)
                    rest.insert(rest.end(), components[j].begin(), components[j].end());
            cuts.emplace_back(hyperedgeIndex, std::vector<VertexSet>{components[i], std::move(rest)});
        }
        break;
    case Routine::AllComponents:
        cuts.emplace_back(hyperedgeIndex, components);
        break;
    }
    return cuts;
}

std::int64_t bipartitionCutCount(const Hypergraph& h) {
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    std::int64_t total = 0;
    for (const auto& s : h.hyperedges()) {
        if (s.size() >= 63)
            return kMax;
        std::int64_t count = (std::int64_t{1} << (s.size() - 1)) - 1;
        if (total > kMax - count)
            return kMax;
        total += count;
    }
    return total;
}

EdgeIndex::EdgeIndex(const Hypergraph& h) : support_(supportGraph(h)) {
    for (std::size_t i = 0; i < support_.numEdges(); ++i)
        index_.emplace(support_.edges()[i], i);
}

std::size_t EdgeIndex::var(const Edge& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
        throw std::out_of_range("edge " + mci::toString(e) + " is not in K(H)");
    return it->second;
}

std::optional<std::size_t> EdgeIndex::find(const Edge& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

SolutionGraph EdgeIndex::toGraph(const std::vector<int>& assignment) const {
    std::vector<Edge> chosen;
    for (std::size_t j = 0; j < size(); ++j)
        if (assignment.at(j) != 0)
            chosen.push_back(edge(j));
    return SolutionGraph(support_.numVertices(), std::move(chosen));
}

std::vector<int> EdgeIndex::toAssignment(const SolutionGraph& g) const {
    std::vector<int> assignment(size(), 0);
    for (const auto& e : g.edges())
        assignment[var(e)] = 1;
    return assignment;
}

std::string EdgeIndex::variableName(const Edge& e) {
    return "x_" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

Constraint cutConstraint(const Cut& c, const EdgeIndex& edges) {
    Constraint con;
    for (const auto& e : crossingPairs(c))
        con.terms.push_back({edges.var(e), 1});
    con.sense = Sense::GreaterEqual;
    con.rhs = static_cast<std::int64_t>(c.arity()) - 1;
    con.group = kCutGroup;
    return con;
}

Constraint spanningConstraint(const VertexSet& s, const EdgeIndex& edges) {
    Constraint con;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            con.terms.push_back({edges.var(Edge(s[i], s[j])), 1});
    con.sense = Sense::GreaterEqual;
    con.rhs = static_cast<std::int64_t>(s.size()) - 1;
    con.group = kSpanningGroup;
    return con;
}

namespace {

LinearModel baseModel(const Hypergraph& h, const EdgeIndex& edges) {
    LinearModel model;
    for (const auto& e : edges.support().edges())
        model.addVariable(EdgeIndex::variableName(e), 1);
    for (const auto& s : h.hyperedges())
        model.addConstraint(spanningConstraint(s, edges));
    return model;
}

Clock::time_point deadlineAfter(double seconds) {
    if (!(seconds < 1e9))
        return Clock::time_point::max();
    return Clock::now() +
           std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

double secondsSince(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

LinearModel buildModel(const Hypergraph& h, const std::vector<Cut>& cuts) {
    EdgeIndex edges(h);
    LinearModel model = baseModel(h, edges);
    std::set<Cut> seen;
    for (const auto& c : cuts)
        if (seen.insert(c).second)
            model.addConstraint(cutConstraint(c, edges));
    return model;
}

CutGenerationSolver::CutGenerationSolver(const Hypergraph& h, Strategy strategy)
    : h_(h), strategy_(strategy), edges_(h), model_(baseModel(h, edges_)) {
    if (strategy_.useSingletonInit)
        addCuts(singletonCuts(h_));
    stats_.finalConstraintCount = model_.numConstraints();
}

std::size_t CutGenerationSolver::addCuts(const std::vector<Cut>& cuts) {
    std::size_t added = 0;
    for (const auto& c : cuts) {
        if (!pool_.insert(c).second)
            continue;
        model_.addConstraint(cutConstraint(c, edges_));
        ++added;
    }
    return added;
}

CutGenerationSolver::Run CutGenerationSolver::run(Clock::time_point deadline) {
    Run result;
    for (;;) {
        if (Clock::now() >= deadline) {
            result.status = SolveStatus::TimedOut;
            stats_.timedOut = true;
            break;
        }
        SolveOptions options;
        options.deadline = deadline;
        SolveOutcome outcome = solve(model_, options);
        ++stats_.solverCalls;
        ++stats_.iterations;
        stats_.nodes += outcome.nodes;

        if (outcome.status == SolveStatus::TimedOut) {
            result.status = SolveStatus::TimedOut;
            stats_.timedOut = true;
            if (!outcome.assignment.empty())
                result.graph = edges_.toGraph(outcome.assignment);
            break;
        }
        if (outcome.status == SolveStatus::Infeasible) {
            result.status = SolveStatus::Infeasible;
            result.graph.reset();
            break;
        }

        stats_.objectiveTrace.push_back(outcome.objective);
        SolutionGraph g = edges_.toGraph(outcome.assignment);
        FeasibilityReport report = isFeasible(g, h_);
        result.graph = std::move(g);
        if (report.feasible) {
            result.status = SolveStatus::Optimal;
            break;
        }

        std::vector<Cut> fresh;
        for (std::size_t idx : report.violated) {
            auto cuts = routineCuts(strategy_.routine, idx, inducedComponents(*result.graph, h_.hyperedge(idx)));
            fresh.insert(fresh.end(), cuts.begin(), cuts.end());
        }
        if (addCuts(fresh) == 0)
            throw std::logic_error("separation produced no new cut");
    }
    stats_.finalConstraintCount = model_.countGroup(kSpanningGroup) + model_.countGroup(kCutGroup);
    return result;
}

MciResult solveMCI(const Hypergraph& h, Strategy strategy, double timeLimit) {
    const auto start = Clock::now();
    CutGenerationSolver solver(h, strategy);
    auto run = solver.run(deadlineAfter(timeLimit));
    MciResult result;
    result.stats = solver.stats();
    result.stats.wallTime = secondsSince(start);
    if (run.graph)
        result.graph = *run.graph;
    else
        result.graph = SolutionGraph(h.numVertices());
    result.feasible = run.status == SolveStatus::Optimal;
    if (run.status == SolveStatus::Infeasible)
        throw std::logic_error("MCI model infeasible; K(H) should always be feasible");
    return result;
}

std::vector<Cut> allBipartitionCuts(const Hypergraph& h) {
    std::vector<Cut> cuts;
    std::set<Cut> seen;
    for (std::size_t i = 0; i < h.numHyperedges(); ++i) {
        const auto& s = h.hyperedge(i);
        if (s.size() < 2)
            continue;
        // subsets containing s[0] on one side, proper
        const std::size_t k = s.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)) - 1; ++mask) {
            VertexSet x{s[0]}, rest;
            for (std::size_t b = 1; b < k; ++b)
                ((mask >> (b - 1)) & 1 ? x : rest).push_back(s[b]);
            Cut c(i, {std::move(x), std::move(rest)});
            if (seen.insert(c).second)
                cuts.push_back(std::move(c));
        }
    }
    return cuts;
}

MciResult fullBipartitionOracle(const Hypergraph& h, double timeLimit) {
    if (bipartitionCutCount(h) > kBipartitionGuard)
        throw std::length_error("bipartition model exceeds " + std::to_string(kBipartitionGuard) + " cuts");
    const auto start = Clock::now();
    LinearModel model = buildModel(h, allBipartitionCuts(h));
    EdgeIndex edges(h);
    SolveOptions options;
    options.deadline = deadlineAfter(timeLimit);
    SolveOutcome outcome = solve(model, options);

    MciResult result;
    result.stats.iterations = 1;
    result.stats.solverCalls = 1;
    result.stats.nodes = outcome.nodes;
    result.stats.finalConstraintCount = model.numConstraints();
    result.stats.timedOut = outcome.status == SolveStatus::TimedOut;
    result.stats.wallTime = secondsSince(start);
    result.graph = outcome.assignment.empty() ? SolutionGraph(h.numVertices()) : edges.toGraph(outcome.assignment);
    result.feasible = outcome.status == SolveStatus::Optimal;
    if (result.feasible)
        result.stats.objectiveTrace.push_back(outcome.objective);
    return result;
}

}  // namespace mci
