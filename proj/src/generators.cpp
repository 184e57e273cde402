#include "chordal/generators.hpp"

#include "chordal/errors.hpp"
#include "chordal/prng.hpp"

#include <algorithm>
#include <cmath>

namespace chordal {

namespace {

void add_clique(std::vector<Edge>& edges, int first, int count) {
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) edges.emplace_back(first + i, first + j);
}

} // namespace

Graph windmill(int k, int l) {
    if (k < 2 || l < 2) throw FormatError("windmill requires k >= 2 and l >= 2");
    const int blade = k - 1;
    std::vector<Edge> edges;
    for (int b = 0; b < l; ++b) {
        int first = 1 + b * blade;
        add_clique(edges, first, blade);
        for (int i = 0; i < blade; ++i) edges.emplace_back(0, first + i);
    }
    return Graph::from_edge_list(1 + l * blade, edges);
}

Graph split_complete(int k, int t) {
    if (k < 1 || t < 1) throw FormatError("split_complete requires k >= 1 and t >= 1");
    std::vector<Edge> edges;
    add_clique(edges, 0, k);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < k; ++j) edges.emplace_back(j, k + i);
    return Graph::from_edge_list(k + t, edges);
}

Graph core_satellite(int c, int s, int eta) {
    if (c < 1 || s < 1 || eta < 2)
        throw FormatError("core_satellite requires c >= 1, s >= 1, eta >= 2");
    std::vector<Edge> edges;
    add_clique(edges, 0, c);
    for (int b = 0; b < eta; ++b) {
        int first = c + b * s;
        add_clique(edges, first, s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < c; ++j) edges.emplace_back(j, first + i);
    }
    return Graph::from_edge_list(c + eta * s, edges);
}

Graph threshold_from_sequence(const std::string& bits) {
    if (bits.empty()) throw FormatError("threshold sequence must be non-empty");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char b = bits[i];
        if (b != '0' && b != '1') throw FormatError("threshold sequence must be over {0,1}");
        if (b == '1')
            for (std::size_t j = 0; j < i; ++j)
                edges.emplace_back(static_cast<Vertex>(j), static_cast<Vertex>(i));
    }
    return Graph::from_edge_list(static_cast<int>(bits.size()), edges);
}

Graph kt_split_graph(int k, int t, int r) {
    if (k < 1 || t < 1 || r < 1) throw FormatError("kt_split requires k, t, r >= 1");
    std::vector<Edge> edges;
    add_clique(edges, 0, r * k);
    for (int i = 0; i < r; ++i)
        for (int a = 0; a < t; ++a) {
            Vertex twin = r * k + i * t + a;
            for (int j = 0; j < k; ++j) edges.emplace_back(i * k + j, twin);
        }
    return Graph::from_edge_list((k + t) * r, edges);
}

Graph random_chordal(int n, double density, std::uint64_t seed) {
    if (n < 1) throw FormatError("random_chordal requires n >= 1");
    if (density < 0.0 || density > 1.0) throw FormatError("density must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::vector<Vertex>> cliques{{0}};
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        // density 1.0 always extends the largest clique, which is the most
        // recently added one; anything lower picks uniformly.
        std::size_t qi = density >= 1.0 ? cliques.size() - 1 : rng.next_below(cliques.size());
        std::vector<Vertex> base = cliques[qi];
        auto want = static_cast<std::size_t>(
            std::ceil(density * static_cast<double>(base.size())));
        want = std::clamp<std::size_t>(want, 1, base.size());
        // partial Fisher-Yates draw of `want` elements
        for (std::size_t i = 0; i < want; ++i)
            std::swap(base[i], base[i + rng.next_below(base.size() - i)]);
        base.resize(want);
        for (Vertex u : base) edges.emplace_back(u, v);
        base.push_back(v);
        std::sort(base.begin(), base.end());
        cliques.push_back(std::move(base));
    }
    return Graph::from_edge_list(n, edges);
}

Graph random_quasi_threshold(int n, std::uint64_t seed) {
    if (n < 1) throw FormatError("random_quasi_threshold requires n >= 1");
    SplitMix64 rng(seed);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    for (Vertex v = 1; v < n; ++v)
        parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(v)));
    // edge u~v iff one is a tree ancestor of the other
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex a = parent[static_cast<std::size_t>(v)]; a >= 0; a = parent[static_cast<std::size_t>(a)])
            edges.emplace_back(a, v);
    return Graph::from_edge_list(n, edges);
}

Graph planted_cycle(int base_n, int cycle_len, std::uint64_t seed) {
    if (base_n < 1 || cycle_len < 4) throw FormatError("planted_cycle requires base_n >= 1, cycle_len >= 4");
    SplitMix64 rng(seed);
    Graph base = random_chordal(base_n, 0.5, rng.next());
    std::vector<Edge> edges = base.edge_list();
    int first = base_n;
    for (int i = 0; i < cycle_len; ++i)
        edges.emplace_back(first + i, first + (i + 1) % cycle_len);
    // one attachment edge keeps the cycle chordless and the graph connected
    edges.emplace_back(static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(base_n))), first);
    return Graph::from_edge_list(base_n + cycle_len, edges);
}

} // namespace chordal
