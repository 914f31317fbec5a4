#include "mci/flow_milp.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mci {

std::string flowVariableName(std::size_t hyperedge, Vertex from, Vertex to) {
    return "f_S" + std::to_string(hyperedge) + "_" + std::to_string(from) + "_" + std::to_string(to);
}

FlowModel buildFlowModel(const Hypergraph& h) {
    FlowModel fm;
    EdgeIndex edges(h);
    auto& model = fm.model;
    for (const auto& e : edges.support().edges())
        model.addVariable(EdgeIndex::variableName(e), 1);
    fm.binaryCount = edges.size();

    for (std::size_t k = 0; k < h.numHyperedges(); ++k) {
        const auto& s = h.hyperedge(k);
        model.addConstraint(spanningConstraint(s, edges));
        ++fm.spanningRows;

        if (s.empty()) {
            fm.roots.push_back(0);
            continue;
        }
        const Vertex root = s.front();
        fm.roots.push_back(root);

        std::map<std::pair<Vertex, Vertex>, std::size_t> arc;
        for (Vertex u : s)
            for (Vertex v : s)
                if (u != v)
                    arc[{u, v}] = model.addVariable(flowVariableName(k, u, v), 0, VarType::Continuous);
        fm.flowCount += arc.size();

        for (Vertex v : s) {
            if (v == root)
                continue;
            Constraint c;
            for (Vertex u : s) {
                if (u == v)
                    continue;
                c.terms.push_back({arc.at({u, v}), 1});
                c.terms.push_back({arc.at({v, u}), -1});
            }
            c.sense = Sense::Equal;
            c.rhs = -1;
            c.group = kConservationGroup;
            model.addConstraint(std::move(c));
            ++fm.conservationRows;
        }

        const auto cap = static_cast<std::int64_t>(s.size()) - 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                Constraint c;
                c.terms.push_back({arc.at({s[i], s[j]}), 1});
                c.terms.push_back({arc.at({s[j], s[i]}), 1});
                c.terms.push_back({edges.var(Edge(s[i], s[j])), -cap});
                c.sense = Sense::LessEqual;
                c.rhs = 0;
                c.group = kCapacityGroup;
                model.addConstraint(std::move(c));
                ++fm.capacityRows;
            }
        }
    }
    return fm;
}

std::int64_t flowConstraintCount(const Hypergraph& h) {
    std::int64_t total = 0;
    for (const auto& s : h.hyperedges()) {
        auto k = static_cast<std::int64_t>(s.size());
        total += 1 + std::max<std::int64_t>(k - 1, 0) + k * (k - 1) / 2;
    }
    return total;
}

std::optional<ArcFlows> flowWitness(const SolutionGraph& g, std::span<const Vertex> s, Vertex root) {
    if (std::find(s.begin(), s.end(), root) == s.end())
        throw std::invalid_argument("root " + std::to_string(root) + " is not in the hyperedge");

    const auto n = static_cast<std::size_t>(g.numVertices());
    std::vector<char> inS(n + 1, 0);
    for (Vertex v : s)
        inS.at(static_cast<std::size_t>(v)) = 1;
    std::vector<std::vector<Vertex>> adj(n + 1);
    for (const auto& e : g.edges()) {
        if (inS[static_cast<std::size_t>(e.u)] && inS[static_cast<std::size_t>(e.v)]) {
            adj[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
    }

    std::vector<Vertex> parent(n + 1, 0);
    std::vector<Vertex> order;
    std::vector<char> seen(n + 1, 0);
    std::deque<Vertex> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (Vertex w : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
        }
    }
    if (order.size() != s.size())
        return std::nullopt;

    ArcFlows flows;
    for (Vertex u : s)
        for (Vertex v : s)
            if (u != v)
                flows[{u, v}] = 0;
    std::vector<std::int64_t> subtree(n + 1, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == root)
            continue;
        Vertex p = parent[static_cast<std::size_t>(v)];
        flows[{v, p}] = subtree[static_cast<std::size_t>(v)];
        subtree[static_cast<std::size_t>(p)] += subtree[static_cast<std::size_t>(v)];
    }
    return flows;
}

bool satisfiesFlowConstraints(const SolutionGraph& g, std::span<const Vertex> s, Vertex root,
                              const ArcFlows& flows) {
    auto flow = [&](Vertex u, Vertex v) -> std::int64_t {
        auto it = flows.find({u, v});
        return it == flows.end() ? 0 : it->second;
    };
    for (const auto& [arc, f] : flows)
        if (f < 0)
            return false;
    const auto cap = static_cast<std::int64_t>(s.size()) - 1;
    for (Vertex v : s) {
        if (v == root)
            continue;
        std::int64_t net = 0;
        for (Vertex u : s) {
            if (u == v)
                continue;
            net += flow(u, v) - flow(v, u);
        }
        if (net != -1)
            return false;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            std::int64_t x = g.contains(Edge(s[i], s[j])) ? 1 : 0;
            if (flow(s[i], s[j]) + flow(s[j], s[i]) > cap * x)
                return false;
        }
    }
    return true;
}

MciResult solveFlowBaseline(const Hypergraph& h, double timeLimit) {
    LinearModel model = buildModel(h, {});
    EdgeIndex edges(h);
    const auto& hyperedges = h.hyperedges();

    auto allowedGraph = [&](std::span<const int> upper) {
        std::vector<Edge> allowed;
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (upper[j] == 1)
                allowed.push_back(edges.edge(j));
        return SolutionGraph(h.numVertices(), std::move(allowed));
    };

    SolveOptions options;
    options.timeLimit = timeLimit;
    options.useHint = false;
    options.hooks.viable = [&](std::span<const int>, std::span<const int> upper) {
        return isFeasible(allowedGraph(upper), h).feasible;
    };
    options.hooks.leaf = [&](std::span<const int> assignment, std::span<const int> lower,
                             std::span<const int> upper) {
        std::vector<int> values(assignment.begin(), assignment.end());
        SolutionGraph g = edges.toGraph(values);
        for (const auto& s : hyperedges) {
            if (s.size() < 2)
                continue;
            auto components = inducedComponents(g, s);
            if (components.size() < 2)
                continue;
            // lowest free variable joining two components of this hyperedge
            std::vector<std::size_t> label(static_cast<std::size_t>(h.numVertices()) + 1, 0);
            for (std::size_t c = 0; c < components.size(); ++c)
                for (Vertex v : components[c])
                    label[static_cast<std::size_t>(v)] = c;
            std::size_t best = edges.size();
            for (std::size_t i = 0; i < s.size(); ++i) {
                for (std::size_t k = i + 1; k < s.size(); ++k) {
                    if (label[static_cast<std::size_t>(s[i])] == label[static_cast<std::size_t>(s[k])])
                        continue;
                    std::size_t var = edges.var(Edge(s[i], s[k]));
                    if (lower[var] != upper[var])
                        best = std::min(best, var);
                }
            }
            if (best == edges.size())
                return LeafVerdict::prune();
            return LeafVerdict::branch(best);
        }
        return LeafVerdict::accept();
    };

    const auto start = Clock::now();
    SolveOutcome outcome = solve(model, options);
    MciResult result;
    result.stats.wallTime = std::chrono::duration<double>(Clock::now() - start).count();
    result.stats.iterations = 1;
    result.stats.solverCalls = 1;
    result.stats.nodes = outcome.nodes;
    result.stats.finalConstraintCount = static_cast<std::size_t>(flowConstraintCount(h));
    result.stats.timedOut = outcome.status == SolveStatus::TimedOut;
    result.graph = outcome.assignment.empty() ? SolutionGraph(h.numVertices()) : edges.toGraph(outcome.assignment);
    result.feasible = outcome.status == SolveStatus::Optimal;
    if (result.feasible)
        result.stats.objectiveTrace.push_back(outcome.objective);
    else if (outcome.status == SolveStatus::Infeasible)
        throw std::logic_error("flow baseline found no solution; K(H) should always be feasible");
    return result;
}

}  // namespace mci
