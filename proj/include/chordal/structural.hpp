#pragma once

#include "chordal/decomposition.hpp"
#include "chordal/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chordal {

/// Where a structure-only eigenvalue prediction comes from.
enum class Provenance {
    zero,                    // the trivial eigenvalue of a connected graph
    non_simplicial_degree,   // d(v)+1 for a non-simplicial vertex
    clique_simplicials,      // |Q| from the extra simplicial vertices of Q
    separator_multiplicity,  // |S| repeated mu(S) times
    kt_split,                // block-structure eigenvalues of a (k,t)-split graph
    simplicial_twins,        // |Q| with explicit two-entry eigenvectors
};

/// Serialized tag used in JSON reports.
const char* provenance_tag(Provenance p);

/// Sparse eigenvector with one +1 and one -1 entry; such a vector is an
/// exact integer eigenvector for the clique size when the two vertices
/// are simplicial true twins.
struct TwinEigenvector {
    Vertex plus;
    Vertex minus;
};

/// An integer Laplacian eigenvalue asserted from structure alone, never
/// from an eigensolve.
struct PredictedEigenvalue {
    std::int64_t value = 0;
    int multiplicity = 0;
    Provenance provenance = Provenance::zero;
    int clique = -1;                           ///< witness clique index, when applicable
    std::vector<Vertex> separator;             ///< witness separator, when applicable
    std::vector<TwinEigenvector> vectors;      ///< witness eigenvectors (simplicial_twins)
};

using EigenvalueMultiset = std::map<std::int64_t, int>;

EigenvalueMultiset to_multiset(const std::vector<PredictedEigenvalue>& predictions);

/// Rooted tree whose ancestor relation induces a connected
/// quasi-threshold graph: u ~ v in G iff one is an ancestor of the other.
struct TreeRepresentation {
    Vertex root = 0;
    std::vector<Vertex> parent;   ///< parent[v]; -1 for the root
    std::vector<int> depth;       ///< edge distance from the root
    std::vector<int> child_count;
};

/// Separator/twin-class structure of a (k,t)-split graph: r pairwise
/// disjoint separators of size k, each carrying t false twins, covering
/// the clique side and the simplicial side respectively.
struct KTSplitStructure {
    int k = 0;
    int t = 0;
    int r = 0;
    std::vector<std::vector<Vertex>> separators;
    std::vector<std::vector<Vertex>> twin_classes;  ///< twin_classes[i] attaches to separators[i]
};

/// Structural test for equal vertex and algebraic connectivity on a
/// connected non-complete chordal graph: the intersection of all distinct
/// minimal vertex separators must itself be a separator consisting of
/// universal vertices. Returns that separator as witness when it holds.
std::optional<std::vector<Vertex>> check_kappa_equals_a(const Graph& g,
                                                        const ChordalDecomposition& d);

/// Quasi-threshold recognition via the closed-neighborhood nesting test on
/// every edge, building the tree representation on acceptance: edges are
/// oriented toward the lower-degree endpoint (ties toward the higher id)
/// and each vertex's parent is its most tightly nesting in-neighbor.
std::optional<TreeRepresentation> recognize_quasi_threshold(const Graph& g);

/// Nonzero eigenvalues from the tree representation: d(u)+1 once per
/// non-pendant vertex u, and depth(u)+1 repeated child_count(u)-1 times;
/// plus the zero eigenvalue.
std::vector<PredictedEigenvalue> qt_spectrum_bapat(const Graph& g, const TreeRepresentation& t);

/// The same spectrum expressed through clique/separator structure:
/// d(v)+1 per non-simplicial vertex, |Q| repeated |Simp(Q)|-1 times,
/// |S| repeated mu(S) times, plus zero.
std::vector<PredictedEigenvalue> qt_spectrum_structural(const Graph& g,
                                                        const ChordalDecomposition& d);

/// Structural sanity checks for connected quasi-threshold graphs: every
/// maximal clique has a simplicial vertex, the separators inside each
/// clique nest into a chain, and every maximal root-to-leaf path of the
/// tree representation is a maximal clique ending in its simplicial
/// vertices.
bool qt_structure_checks(const Graph& g, const ChordalDecomposition& d);

/// (k,t)-split recognition on a connected split graph. Returns the
/// structure when all separators share size k and are pairwise disjoint,
/// every simplicial vertex's neighborhood is one of them, the attached
/// twin classes share size t, and the counting/degree identities
/// (n = (k+t)r, biregularity) hold.
std::optional<KTSplitStructure> recognize_kt_split(const Graph& g,
                                                   const ChordalDecomposition& d);

/// The guaranteed integer eigenvalues of a (k,t)-split graph:
/// 0 once, k with multiplicity r(t-1), rk+t with multiplicity r(k-1),
/// k+t once — n-2r+2 values; the complete spectrum when r = 1.
std::vector<PredictedEigenvalue> kt_split_partial_spectrum(const KTSplitStructure& s);

/// For every maximal clique of a connected chordal graph with p >= 2
/// simplicial vertices: |Q| is an eigenvalue with multiplicity at least
/// p-1, witnessed by p-1 linearly independent two-entry eigenvectors
/// anchored at the lowest-id simplicial vertex. Each returned vector
/// satisfies L y = |Q| y in exact integer arithmetic.
std::vector<PredictedEigenvalue> simplicial_twin_predictions(const Graph& g,
                                                             const ChordalDecomposition& d);

/// Membership flags for the recognized subclasses of a connected graph.
/// kappa_equals_a is decided structurally and is true for complete graphs
/// by convention.
struct Classification {
    bool chordal = false;
    bool split = false;
    bool kappa_equals_a = false;
    bool quasi_threshold = false;
    bool threshold = false;
    bool kt_split = false;
    bool gen_core_satellite = false;
    bool split_complete = false;
    bool windmill = false;
};

Classification classify(const Graph& g);
Classification classify(const Graph& g, const ChordalDecomposition* d);

/// Split-graph test via the degree-sequence characterization.
bool is_split_graph(const Graph& g);

/// Threshold test by reverse peeling of universal and isolated vertices.
bool is_threshold_graph(const Graph& g);

} // namespace chordal
