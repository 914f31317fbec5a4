#include "mci/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mci {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b)
        throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
}

std::string toString(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Hypergraph::Hypergraph(int n, std::vector<VertexSet> hyperedges)
    : n_(n), hyperedges_(std::move(hyperedges)) {
    if (n_ < 1)
        throw std::invalid_argument("hypergraph needs at least one vertex");
    for (std::size_t i = 0; i < hyperedges_.size(); ++i) {
        auto& s = hyperedges_[i];
        if (s.empty())
            continue;  // trivially connected
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("hyperedge " + std::to_string(i) + " repeats a vertex");
        if (s.front() < 1 || s.back() > n_)
            throw std::invalid_argument("hyperedge " + std::to_string(i) + " has a vertex outside 1.." +
                                        std::to_string(n_));
    }
}

double Hypergraph::density() const {
    return static_cast<double>(hyperedges_.size()) / static_cast<double>(n_);
}

SolutionGraph::SolutionGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
        if (e.u < 1 || e.v > n_)
            throw std::invalid_argument("edge " + mci::toString(e) + " outside 1.." + std::to_string(n_));
    }
}

bool SolutionGraph::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string SolutionGraph::toString() const {
    std::string out;
    for (const auto& e : edges_) {
        if (!out.empty())
            out += ' ';
        out += mci::toString(e);
    }
    return out;
}

UnionFind::UnionFind(std::size_t size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root)
        root = parent_[root];
    while (parent_[x] != root) {
        std::size_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
        return false;
    if (size_[a] < size_[b])
        std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

SolutionGraph supportGraph(const Hypergraph& h) {
    std::vector<Edge> edges;
    for (const auto& s : h.hyperedges())
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                edges.emplace_back(s[i], s[j]);
    return SolutionGraph(h.numVertices(), std::move(edges));
}

std::vector<VertexSet> inducedComponents(const SolutionGraph& g, std::span<const Vertex> s) {
    // local index of each vertex of s, -1 outside
    std::vector<int> local(static_cast<std::size_t>(g.numVertices()) + 1, -1);
    for (std::size_t i = 0; i < s.size(); ++i)
        local.at(static_cast<std::size_t>(s[i])) = static_cast<int>(i);

    UnionFind uf(s.size());
    for (const auto& e : g.edges()) {
        int a = local[static_cast<std::size_t>(e.u)];
        int b = local[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0)
            uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }

    std::vector<VertexSet> byRoot(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        byRoot[uf.find(i)].push_back(s[i]);

    std::vector<VertexSet> components;
    for (auto& c : byRoot) {
        if (c.empty())
            continue;
        std::sort(c.begin(), c.end());
        components.push_back(std::move(c));
    }
    std::sort(components.begin(), components.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return components;
}

FeasibilityReport isFeasible(const SolutionGraph& g, const Hypergraph& h) {
    FeasibilityReport report;
    for (std::size_t i = 0; i < h.numHyperedges(); ++i) {
        const auto& s = h.hyperedge(i);
        if (s.size() <= 1)
            continue;
        if (inducedComponents(g, s).size() > 1) {
            report.feasible = false;
            report.violated.push_back(i);
        }
    }
    return report;
}

}  // namespace mci
