#include "cvd/driver.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "cvd/kempe.hpp"
#include "cvd/verifier.hpp"

namespace cvd {

bool heuristic_pass(Graph& g, Color colors, int repetition_limit, Rng& rng, PassStats* stats) {
    PassStats local;
    PassStats& s = stats ? *stats : local;
    s = PassStats{};

    ConflictDictionary cd = ConflictDictionary::create(g, colors);
    std::int64_t best = cd.total();
    s.initial_conflicts = s.best_conflicts = s.final_conflicts = best;

    int repetitions = 0;
    bool success = best == 0;
    while (best > 0) {
        const VertexId v = cd.sample_max_level(rng);
        s.recolorings += kempe_start(g, cd, v, rng);
        ++s.chains;
        const std::int64_t current = cd.total();
        s.final_conflicts = current;
        if (current == 0) {
            success = true;
            break;
        }
        if (current >= best) {
            if (++repetitions > repetition_limit) break;
        } else {
            repetitions = 0;
        }
        best = std::min(best, current);
        s.best_conflicts = best;
    }
    if (success) s.best_conflicts = 0;

#ifndef NDEBUG
    if (cd.total() != total_conflicts_from_scratch(g))
        throw std::logic_error("incremental conflictivity diverged from recomputation");
#endif
    s.success = success;
    return success;
}

RunReport apply_heuristic(Graph& g, const HeuristicParams& params) {
    if (params.colors < 0 || static_cast<std::size_t>(params.colors) < g.max_degree())
        throw ParameterError("D=" + std::to_string(params.colors) + " is below the maximum degree " +
                             std::to_string(g.max_degree()));
    if (params.repetition_limit < 0) throw ParameterError("repetition limit must be >= 0");
    if (params.iteration_limit < 1) throw ParameterError("iteration limit must be >= 1");

    RunReport report;
    report.seed = params.seed;
    Rng rng(params.seed);

    const auto t0 = std::chrono::steady_clock::now();
    for (int pass = 1; pass <= params.iteration_limit; ++pass) {
        precolor(g, params.colors, params.precolor, rng);
        PassStats stats;
        const bool ok = heuristic_pass(g, params.colors, params.repetition_limit, rng, &stats);
        report.pass_stats.push_back(stats);
        report.passes = pass;
        report.final_conflicts = stats.final_conflicts;
        if (ok) {
            report.success = true;
            break;
        }
    }
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (report.success && !check_edge_coloring_serial(g, params.colors))
        throw std::logic_error("heuristic reported success on an improper coloring");
    return report;
}

}  // namespace cvd
