#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

using Rng = std::mt19937_64;

/// degree(v) minus the number of distinct colors at v. Throws on an uncolored incident edge.
std::size_t conflict_level(const Graph& g, VertexId v);

/// Sum of conflict levels recomputed from the coloring alone.
std::int64_t total_conflicts_from_scratch(const Graph& g);

/**
 * Buckets of vertices keyed by conflict level (1 .. max_degree-1).
 *
 * Level-0 vertices are in no bucket. Each bucket is a dense vector with a
 * per-vertex position index, giving O(1) insert/remove and uniform sampling.
 * The total conflictivity is kept incrementally.
 */
class ConflictDictionary {
public:
    ConflictDictionary() = default;

    /// Build from a total coloring using `num_colors` colors.
    static ConflictDictionary create(const Graph& g, Color num_colors);

    Color num_colors() const { return num_colors_; }
    std::size_t level(VertexId v) const { return level_[v]; }
    std::span<const VertexId> bucket(std::size_t level) const;
    std::size_t num_levels() const { return buckets_.size(); }

    /// Largest level with a nonempty bucket. Throws std::logic_error when all are empty.
    std::size_t max_level() const;
    std::int64_t total() const { return total_; }

    /// Uniform member of the highest nonempty bucket.
    VertexId sample_max_level(Rng& rng) const;

    /// Re-read v's level from the graph and move it between buckets.
    /// Returns new level minus old level.
    int refresh(const Graph& g, VertexId v);

    /// Same buckets (as sets) and same total.
    bool same_contents(const ConflictDictionary& other) const;

private:
    void insert(VertexId v, std::size_t level);
    void erase(VertexId v);

    Color num_colors_ = 0;
    std::vector<std::vector<VertexId>> buckets_;
    std::vector<std::size_t> level_;
    std::vector<std::size_t> position_;
    std::int64_t total_ = 0;
};

/**
 * Recolor edge {u,v} to c and update both endpoints in the dictionary.
 * Returns the conflict-level variation at v (the second endpoint).
 */
int color_edge_and_update(Graph& g, ConflictDictionary& cd, VertexId u, VertexId v, Color c);

}  // namespace cvd
