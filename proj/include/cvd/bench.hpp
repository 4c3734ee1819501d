#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cvd/precolor.hpp"

namespace cvd {

struct SweepConfig {
    std::vector<std::size_t> degrees{3};
    std::vector<std::size_t> sizes{100};
    std::size_t instances = 30;
    int repetition_limit = 50;
    int iteration_limit = 50;
    std::uint64_t seed = 0;
    PrecolorMode precolor = PrecolorMode::greedy;
};

struct BenchRecord {
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t instance = 0;
    std::uint64_t seed = 0;
    bool success = false;
    bool verified = false;
    int passes = 0;
    double wall_time_s = 0.0;
    double time_per_pass_s = 0.0;
};

struct Stat {
    double min = 0.0;
    double avg = 0.0;
    double max = 0.0;
};

struct BenchSummary {
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t runs = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    Stat passes;
    Stat time_s;
    Stat time_per_pass_s;
};

/// Seed for one instance; depends only on its coordinates, not on sweep order.
std::uint64_t derive_seed(std::uint64_t base, std::size_t d, std::size_t n, std::size_t instance);

/// Throws ParameterError on any (n,d) the random regular generator rejects.
void validate_sweep(const SweepConfig& config);

/// Generate one random d-regular graph and color it with D = d.
/// Timing covers the heuristic only; successes are re-checked by the verifier.
BenchRecord run_instance(const SweepConfig& config, std::size_t d, std::size_t n,
                         std::size_t instance);

/// Reference sweep, one instance after another. Rows sorted by (d, n, instance).
std::vector<BenchRecord> run_sweep_serial(const SweepConfig& config);

/// OpenMP sweep over instances; same rows and order as run_sweep_serial.
/// threads <= 0 uses the OpenMP default.
std::vector<BenchRecord> run_sweep_parallel(const SweepConfig& config, int threads = 0);

/// One summary per (d, n), in row order.
std::vector<BenchSummary> summarize(std::span<const BenchRecord> records);

void write_csv(std::ostream& out, std::span<const BenchRecord> records,
               std::span<const BenchSummary> summaries);

}  // namespace cvd
