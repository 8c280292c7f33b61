#ifndef EDGEBETTI_GRAPH_ENUMERATION_HPP
#define EDGEBETTI_GRAPH_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "edgebetti/graph.hpp"

namespace edgebetti {

/// Isomorphism-invariant code: the lexicographically largest upper-triangle
/// adjacency word over relabelings consistent with a degree refinement.
/// Limited to n <= 11 so the word fits in 64 bits.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of chordal graphs on exactly n
/// vertices (n <= 8), built by adding simplicial vertices.
std::vector<Graph> enumerate_chordal_graphs(int n);

/// One representative per isomorphism class of trees on exactly n vertices
/// (1 <= n <= 11), built by adding leaves.
std::vector<Graph> enumerate_trees(int n);

/**
 * Chordal graph on n vertices grown along a random perfect elimination
 * ordering: each new vertex is joined to a random clique among the earlier
 * ones. Fully determined by (n, seed).
 */
Graph random_chordal_graph(int n, std::uint64_t seed);

} // namespace edgebetti

#endif
