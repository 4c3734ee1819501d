#pragma once

#include <cstdint>

#include "cvd/conflict_dictionary.hpp"
#include "cvd/graph.hpp"

namespace cvd {

/**
 * Random simple d-regular graph on n vertices.
 *
 * Stub pairing with incremental repair: each round shuffles the remaining
 * stubs and pairs them, keeping pairs that are neither loops nor repeats.
 * When no admissible pair is left among the leftover stubs the whole
 * attempt restarts. Gives up after 10*n restarts.
 *
 * Throws GraphError when n*d is odd or d >= n (d = 0 is allowed).
 */
Graph random_regular_graph(std::size_t n, std::size_t d, Rng& rng);

/// Binomial coefficient C(n, k); 0 when k > n.
std::uint64_t binomial(unsigned n, unsigned k);

/**
 * Odd graph O_k: vertices are the (k-1)-subsets of {0..2k-2}, adjacent iff
 * disjoint. Vertex ids follow colexicographic order of the subsets, which
 * is ascending order of their bitmasks. Requires 2 <= k <= 16.
 */
Graph odd_graph(unsigned k);

/// Bitmask of the subset that odd_graph(k) assigns to vertex `id`.
std::uint32_t odd_graph_subset(unsigned k, VertexId id);

}  // namespace cvd
