#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvd/bench.hpp"
#include "cvd/graph.hpp"
#include "cvd/precolor.hpp"

namespace cvd::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kHeuristicFailure = 1,  // also: verify found an improper coloring
    kUsageError = 2,
    kIoError = 3,
    kColoringMismatch = 4,
    kColorOutOfRange = 5,
};

struct RunOptions {
    std::optional<Color> colors;  // defaults to the maximum degree (k for oddgraph)
    int repetition_limit = 50;
    int iteration_limit = 50;
    std::uint64_t seed = 0;
    PrecolorMode precolor = PrecolorMode::greedy;
};

struct ColorOptions {
    std::filesystem::path input;
    std::filesystem::path output;
    RunOptions run;
};

struct BenchOptions {
    SweepConfig sweep;
    std::optional<std::filesystem::path> csv;  // stdout when absent
    int jobs = 1;                              // 1 = serial reference path
};

struct OddGraphOptions {
    unsigned k = 3;
    RunOptions run;
};

struct VerifyOptions {
    std::filesystem::path graph;
    std::filesystem::path coloring;
    std::optional<Color> colors;
};

int cmd_color(const ColorOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oddgraph(const OddGraphOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Parse `args` (without the program name) and dispatch to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvd::cli
