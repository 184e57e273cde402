#pragma once

#include "chordal/graph.hpp"

#include <cstdint>
#include <string>

namespace chordal {

/// l copies of K_k glued at a shared universal hub. The hub is vertex 0
/// and each blade occupies a consecutive id block.
Graph windmill(int k, int l);

/// K_k joined to t independent vertices; clique first in the labeling.
Graph split_complete(int k, int t);

/// K_c joined to eta disjoint copies of K_s; core occupies ids 0..c-1.
Graph core_satellite(int c, int s, int eta);

/// Threshold construction from a 0/1 string: each character adds a vertex,
/// '0' isolated, '1' universal (adjacent to everything added so far).
Graph threshold_from_sequence(const std::string& bits);

/// r disjoint size-k separators forming one clique of rk vertices
/// (ids 0..rk-1), each separator carrying t false twins attached to all of
/// it. Removing the clique edges leaves r copies of K_{k,t}.
Graph kt_split_graph(int k, int t, int r);

/// Connected chordal graph by iterated simplicial-vertex addition: each
/// new vertex attaches to a random subset of an existing clique, of size
/// ceil(density * |Q|) clamped to at least 1. density 1.0 yields K_n.
Graph random_chordal(int n, double density, std::uint64_t seed);

/// Connected quasi-threshold graph: the ancestor closure of a random
/// recursive tree (each vertex picks an earlier parent), which realizes a
/// random expression of isolated-vertex / union / universal-vertex steps
/// closed by a final universal root.
Graph random_quasi_threshold(int n, std::uint64_t seed);

/// Connected graph guaranteed non-chordal: a random chordal base with a
/// chordless cycle of the given length attached at a single vertex.
Graph planted_cycle(int base_n, int cycle_len, std::uint64_t seed);

} // namespace chordal
