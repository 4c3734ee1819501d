#pragma once

#include <cstddef>
#include <optional>

#include "cvd/conflict_dictionary.hpp"
#include "cvd/graph.hpp"

namespace cvd {

struct KempeNextResult {
    int variation;                  // conflict-level change at `node`
    Color old_color;                // color of {last,node} before the swap
    std::optional<VertexId> next;   // continuation along the chain, if any
};

/// Chain continues iff both `next` and `carry_color` are set.
struct KempeStepResult {
    VertexId last;
    std::optional<VertexId> next;
    std::optional<Color> carry_color;

    bool terminal() const { return !next.has_value(); }
};

/**
 * Pick a random neighbor w != last of node whose edge {node,w} has
 * new_color, then recolor {last,node} to new_color.
 */
KempeNextResult kempe_next(Graph& g, ConflictDictionary& cd, VertexId last, VertexId node,
                           Color new_color, Rng& rng);

/// One swap. Terminal when the conflict at node dropped or no continuation exists.
KempeStepResult kempe_step(Graph& g, ConflictDictionary& cd, VertexId last, VertexId node,
                           Color new_color, Rng& rng);

/**
 * Swap colors along the chain that starts with edge {start,node}. The walk
 * stops at a terminal step or when it returns to a vertex already on the
 * chain, so it performs at most num_vertices() recolorings.
 *
 * Returns the number of recolorings done.
 */
std::size_t kempe_process(Graph& g, ConflictDictionary& cd, VertexId start, VertexId node,
                          Color new_color, Rng& rng);

/**
 * Launch one chain from v: choose a random incident edge whose color is
 * repeated at v and a random color missing at v, then run kempe_process.
 * No-op (returns 0) if v has no repeated color.
 */
std::size_t kempe_start(Graph& g, ConflictDictionary& cd, VertexId v, Rng& rng);

}  // namespace cvd
