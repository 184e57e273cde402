#include "chordal/graph.hpp"

#include "chordal/errors.hpp"

#include <algorithm>
#include <string>

namespace chordal {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw FormatError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    int m = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m += static_cast<int>(nbrs.size());
    }
    g.m_ = m / 2;
    return g;
}

int Graph::degree(Vertex v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex out of range: " + std::to_string(v));
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)].size() <= adj_[static_cast<std::size_t>(v)].size()
                        ? adj_[static_cast<std::size_t>(u)]
                        : adj_[static_cast<std::size_t>(v)];
    Vertex target = adj_[static_cast<std::size_t>(u)].size() <= adj_[static_cast<std::size_t>(v)].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;  // already lexicographic: u ascending, adjacency sorted
}

LaplacianMatrix::LaplacianMatrix(const Graph& g) : n_(g.order()) {
    a_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
        a_[static_cast<std::size_t>(v) * n_ + v] = g.degree(v);
        for (Vertex w : g.neighbors(v)) a_[static_cast<std::size_t>(v) * n_ + w] = -1;
    }
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<Edge> edges = g1.edge_list();
    int off = g1.order();
    for (auto [u, v] : g2.edge_list()) edges.emplace_back(u + off, v + off);
    return Graph::from_edge_list(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
    std::vector<Edge> edges = g1.edge_list();
    int off = g1.order();
    for (auto [u, v] : g2.edge_list()) edges.emplace_back(u + off, v + off);
    for (Vertex u = 0; u < g1.order(); ++u)
        for (Vertex v = 0; v < g2.order(); ++v) edges.emplace_back(u, v + off);
    return Graph::from_edge_list(g1.order() + g2.order(), edges);
}

LaplacianMatrix laplacian(const Graph& g) { return LaplacianMatrix(g); }

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const std::vector<Vertex>& vertices) {
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex v : vertices)
        for (Vertex w : g.neighbors(v))
            if (v < w && index[static_cast<std::size_t>(w)] >= 0)
                edges.emplace_back(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
    return {Graph::from_edge_list(static_cast<int>(vertices.size()), edges), vertices};
}

} // namespace chordal
