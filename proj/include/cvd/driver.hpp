#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cvd/conflict_dictionary.hpp"
#include "cvd/graph.hpp"
#include "cvd/precolor.hpp"

namespace cvd {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HeuristicParams {
    Color colors = 3;
    int repetition_limit = 50;
    int iteration_limit = 50;
    std::uint64_t seed = 0;
    PrecolorMode precolor = PrecolorMode::greedy;
};

struct PassStats {
    std::int64_t initial_conflicts = 0;
    std::int64_t final_conflicts = 0;
    std::int64_t best_conflicts = 0;
    std::size_t chains = 0;
    std::size_t recolorings = 0;
    bool success = false;
};

struct RunReport {
    bool success = false;
    int passes = 0;
    double wall_time_s = 0.0;
    std::int64_t final_conflicts = 0;
    std::uint64_t seed = 0;
    std::vector<PassStats> pass_stats;
};

/**
 * One pass of the main loop on an already pre-colored graph.
 *
 * Repeatedly picks a uniform vertex of the highest conflict level and starts
 * a Kempe chain from it. Tracks the best conflictivity seen in the pass; a
 * choice that does not strictly beat it bumps a counter, and the pass gives
 * up once the counter exceeds `repetition_limit`.
 */
bool heuristic_pass(Graph& g, Color colors, int repetition_limit, Rng& rng,
                    PassStats* stats = nullptr);

/// Up to iteration_limit passes, each from a fresh pre-coloring.
/// Throws ParameterError if colors < max degree or the limits are invalid.
RunReport apply_heuristic(Graph& g, const HeuristicParams& params);

}  // namespace cvd
