#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mci {

/// Vertices are dense 1-based integers.
using Vertex = int;
using VertexSet = std::vector<Vertex>;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    auto operator<=>(const Edge&) const = default;
};

std::string toString(const Edge& e);

/**
 * Input hypergraph: n vertices labeled 1..n and an ordered sequence of
 * hyperedges. Hyperedges are kept in input order; duplicates are allowed.
 * Each hyperedge is stored sorted.
 */
class Hypergraph {
public:
    Hypergraph() = default;
    /// Hyperedges of size 0 or 1 are allowed and always connected. Throws
    /// std::invalid_argument on a vertex out of range or a vertex repeated
    /// inside one hyperedge.
    Hypergraph(int n, std::vector<VertexSet> hyperedges);

    int numVertices() const { return n_; }
    std::size_t numHyperedges() const { return hyperedges_.size(); }
    const std::vector<VertexSet>& hyperedges() const { return hyperedges_; }
    const VertexSet& hyperedge(std::size_t i) const { return hyperedges_.at(i); }

    /// m / n
    double density() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> hyperedges_;
};

/// Simple undirected graph on 1..n. Edges are kept sorted and unique, which
/// is the canonical form used for solution sets.
class SolutionGraph {
public:
    SolutionGraph() = default;
    explicit SolutionGraph(int n, std::vector<Edge> edges = {});

    int numVertices() const { return n_; }
    std::size_t numEdges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(const Edge& e) const;

    /// Space separated "u-v" tokens in canonical order.
    std::string toString() const;

    auto operator<=>(const SolutionGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Disjoint-set forest over 0..size-1 with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t size);

    std::size_t find(std::size_t x);
    bool unite(std::size_t a, std::size_t b);
    std::size_t setSize(std::size_t x) { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// K(H): an edge uv iff u and v share a hyperedge.
SolutionGraph supportGraph(const Hypergraph& h);

/// Connected components of g[s], each sorted, listed by smallest member.
std::vector<VertexSet> inducedComponents(const SolutionGraph& g, std::span<const Vertex> s);

struct FeasibilityReport {
    bool feasible = true;
    std::vector<std::size_t> violated;  // hyperedge indices, input order
};

FeasibilityReport isFeasible(const SolutionGraph& g, const Hypergraph& h);

}  // namespace mci
