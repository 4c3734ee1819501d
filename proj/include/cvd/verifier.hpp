#pragma once

#include <cstddef>

#include "cvd/graph.hpp"

namespace cvd {

/// All colors at v distinct and inside [0, colors). Throws on an uncolored edge.
bool properly_colored(const Graph& g, VertexId v, Color colors);

/// OpenMP kernel over vertices. Never consults a ConflictDictionary.
bool check_edge_coloring(const Graph& g, Color colors);

/// Serial reference for check_edge_coloring.
bool check_edge_coloring_serial(const Graph& g, Color colors);

inline constexpr std::size_t kBruteForceEdgeCap = 16;

/// Exhaustive search: can the edges be properly colored with `colors` colors?
/// Leaves the graph's own colors untouched.
bool edge_colorable(const Graph& g, Color colors, std::size_t max_edges = kBruteForceEdgeCap);

/// Exact chromatic index by trying D = max degree, then max degree + 1.
/// Throws std::invalid_argument above `max_edges` edges.
std::size_t brute_force_chromatic_index(const Graph& g,
                                        std::size_t max_edges = kBruteForceEdgeCap);

}  // namespace cvd
