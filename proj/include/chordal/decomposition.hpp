#pragma once

#include "chordal/graph.hpp"

#include <vector>

namespace chordal {

/// Clique/separator structure of a connected chordal graph.
///
/// The clique tree is stored as parent edges: for every maximal clique
/// except the first, one edge to an earlier clique whose separator is the
/// intersection of the two. Separators are deduplicated into `separators`
/// (sorted vertex sets) with their multiplicities; multiplicities sum to
/// clique_count() - 1.
struct ChordalDecomposition {
    std::vector<Vertex> peo;                             ///< perfect elimination ordering
    std::vector<std::vector<Vertex>> cliques;            ///< maximal cliques, each sorted
    std::vector<std::pair<int, int>> tree_edges;         ///< (clique, parent clique) pairs
    std::vector<int> edge_separator;                     ///< per tree edge: index into separators
    std::vector<std::vector<Vertex>> separators;         ///< distinct minimal vertex separators
    std::vector<int> multiplicity;                       ///< per distinct separator
    std::vector<std::vector<Vertex>> simplicial_per_clique;
    std::vector<Vertex> simplicial;                      ///< all simplicial vertices, sorted
    std::vector<int> clique_membership;                  ///< per vertex: #cliques containing it
    std::vector<int> home_clique;                        ///< per vertex: one clique containing it

    int clique_count() const { return static_cast<int>(cliques.size()); }
    int separator_count() const { return static_cast<int>(separators.size()); }
    bool is_simplicial(Vertex v) const { return clique_membership[static_cast<std::size_t>(v)] == 1; }
};

/// Maximum cardinality search visit order, ties broken by lowest vertex id.
/// If the graph is chordal, the reverse of this order is a perfect
/// elimination ordering. Requires a connected graph.
std::vector<Vertex> mcs_order(const Graph& g);

/// Chordality test: MCS followed by the linear-time elimination-ordering
/// verification. Requires a connected graph.
bool is_chordal(const Graph& g);

/// Full decomposition of a connected chordal graph: maximal cliques read
/// off the cardinality sequence of the search, clique-tree edges attached
/// at the clique of the most recently visited neighbor, separators as
/// clique-tree edge intersections.
ChordalDecomposition decompose(const Graph& g);

/// Vertices whose neighborhood is a clique; equivalently, vertices lying
/// in exactly one maximal clique.
std::vector<Vertex> simplicial_vertices(const Graph& g, const ChordalDecomposition& d);

/// Vertex connectivity of a connected chordal graph: the smallest minimal
/// vertex separator, or n-1 for complete graphs.
int vertex_connectivity_chordal(const Graph& g, const ChordalDecomposition& d);

} // namespace chordal
