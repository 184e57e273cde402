#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chordal {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction: all operators build new graphs.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Endpoints must lie in [0, n);
    /// self-loops are rejected, duplicate edges are collapsed.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_[static_cast<std::size_t>(v)].data(), adj_[static_cast<std::size_t>(v)].size()};
    }

    int degree(Vertex v) const;

    /// Binary search on the sorted adjacency list of the smaller-degree side.
    bool has_edge(Vertex u, Vertex v) const;

    bool is_connected() const;

    /// All edges in canonical order: u < v, sorted lexicographically.
    std::vector<Edge> edge_list() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

/// Laplacian L = D - A as a dense integer matrix. Row sums are zero and
/// the trace equals twice the edge count.
class LaplacianMatrix {
public:
    explicit LaplacianMatrix(const Graph& g);

    int order() const { return n_; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<std::int64_t> a_;
};

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Join: disjoint union plus all edges between the two sides, so
/// m = m1 + m2 + n1*n2.
Graph join(const Graph& g1, const Graph& g2);

LaplacianMatrix laplacian(const Graph& g);

/// Connected components as vertex lists; each list is sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Induced subgraph on the given (sorted) vertices, relabeled 0..k-1 in
/// that order. Returns the subgraph and the original label of each vertex.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const std::vector<Vertex>& vertices);

} // namespace chordal
