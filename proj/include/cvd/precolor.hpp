#pragma once

#include <string_view>

#include "cvd/conflict_dictionary.hpp"
#include "cvd/graph.hpp"

namespace cvd {

enum class PrecolorMode { greedy, random };

std::string_view to_string(PrecolorMode mode);
/// Accepts "greedy" or "random"; throws std::invalid_argument otherwise.
PrecolorMode parse_precolor_mode(std::string_view text);

/**
 * Clear all colors, then visit edges by ascending (min endpoint, max endpoint).
 * Each edge gets a uniform color among those free at both endpoints, or a
 * uniform color from [0,num_colors) when none is free.
 *
 * Returns how many edges fell back to the unconstrained draw.
 */
std::size_t greedy_precolor(Graph& g, Color num_colors, Rng& rng);

/// Independent uniform color in [0,num_colors) for every edge.
void random_precolor(Graph& g, Color num_colors, Rng& rng);

void precolor(Graph& g, Color num_colors, PrecolorMode mode, Rng& rng);

}  // namespace cvd
