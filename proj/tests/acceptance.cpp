// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvd/bench.hpp"
#include "cvd/driver.hpp"
#include "cvd/generators.hpp"
#include "cvd/verifier.hpp"
#include "support/properties.hpp"
#include "support/test_graphs.hpp"

using namespace cvd;

namespace {

constexpr std::uint64_t kSeed = 20130101;
constexpr std::size_t kInstances = 30;
constexpr std::size_t kMinSuccesses = 29;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& why) {
        if (!ok) {
            pass = false;
            detail << " [violated: " << why << "]";
        }
    }
};

SweepConfig sweep(std::vector<std::size_t> degrees, std::vector<std::size_t> sizes) {
    SweepConfig c;
    c.degrees = std::move(degrees);
    c.sizes = std::move(sizes);
    c.instances = kInstances;
    c.repetition_limit = 50;
    c.iteration_limit = 50;
    c.seed = kSeed;
    return c;
}

// Runs are deterministic per seed, so repeats redo identical work; keeping
// each instance's fastest repeat strips scheduler noise from millisecond timings.
constexpr int kTimingRepeats = 5;

std::vector<BenchRecord> timed_sweep(const SweepConfig& config) {
    std::vector<BenchRecord> best = run_sweep_serial(config);
    for (int i = 1; i < kTimingRepeats; ++i) {
        const std::vector<BenchRecord> again = run_sweep_serial(config);
        for (std::size_t j = 0; j < best.size(); ++j) {
            if (again[j].passes != best[j].passes || again[j].success != best[j].success)
                throw std::logic_error("repeated run diverged");
            if (again[j].wall_time_s < best[j].wall_time_s) best[j] = again[j];
        }
    }
    return best;
}

std::map<std::pair<std::size_t, std::size_t>, BenchSummary> by_cell(
    const std::vector<BenchSummary>& summaries) {
    std::map<std::pair<std::size_t, std::size_t>, BenchSummary> out;
    for (const auto& s : summaries) out[{s.d, s.n}] = s;
    return out;
}

Outcome cubic_success_rate() {
    Outcome o;
    const auto records = run_sweep_serial(sweep({3}, {100, 1000, 10000}));
    for (const auto& s : summarize(records)) {
        o.detail << " n=" << s.n << ":" << s.successes << "/" << s.runs;
        o.require(s.successes >= kMinSuccesses, "n=" + std::to_string(s.n) + " below 29/30");
    }
    for (const auto& r : records)
        o.require(!r.success || r.verified, "success not confirmed by verifier");
    return o;
}

// Shared by the scaling and pass-count criteria.
const std::map<std::pair<std::size_t, std::size_t>, BenchSummary>& cubic_scaling_cells() {
    static const auto cells = by_cell(summarize(timed_sweep(sweep({3}, {1000, 2000, 4000, 8000}))));
    return cells;
}

Outcome cubic_scaling() {
    Outcome o;
    const auto& cells = cubic_scaling_cells();
    for (const auto& [key, s] : cells) o.detail << " n=" << key.second << ":" << s.time_s.avg * 1e3 << "ms";
    const double ratio = cells.at({3, 8000}).time_s.avg / cells.at({3, 1000}).time_s.avg;
    o.detail << " ratio(8000/1000)=" << ratio;
    o.require(ratio >= 4.0 && ratio <= 16.0, "ratio outside [4, 16]");
    return o;
}

Outcome cubic_pass_flatness() {
    Outcome o;
    const auto& cells = cubic_scaling_cells();
    const double small = cells.at({3, 1000}).passes.avg;
    const double large = cells.at({3, 8000}).passes.avg;
    o.detail << " avg passes n=1000:" << small << " n=8000:" << large;
    o.require(large <= 3.0, "n=8000 average passes above 3");
    o.require(large <= 2.0 * small, "n=8000 average above twice n=1000");
    return o;
}

Outcome regular_sweep() {
    Outcome o;
    const std::vector<std::size_t> degrees{3, 7, 11, 15}, sizes{200, 400, 800};
    const auto cells = by_cell(summarize(timed_sweep(sweep(degrees, sizes))));
    for (std::size_t n : sizes) {
        o.detail << " n=" << n << ":";
        double previous = 0.0;
        for (std::size_t d : degrees) {
            const BenchSummary& s = cells.at({d, n});
            o.detail << " d" << d << "=" << s.successes << "/" << s.runs << "," << s.time_s.avg * 1e3
                     << "ms";
            o.require(s.successes >= kMinSuccesses,
                      "d=" + std::to_string(d) + " n=" + std::to_string(n) + " below 29/30");
            o.require(s.time_s.avg >= previous,
                      "avg time decreased at d=" + std::to_string(d) + " n=" + std::to_string(n));
            previous = s.time_s.avg;
        }
    }
    return o;
}

Outcome odd_graphs() {
    Outcome o;
    auto color = [&](unsigned k, double* seconds) {
        Graph g = odd_graph(k);
        HeuristicParams p;
        p.colors = static_cast<Color>(k);
        p.seed = kSeed + k;
        const RunReport r = apply_heuristic(g, p);
        if (seconds) *seconds = r.wall_time_s;
        o.detail << " O" << k << "(" << g.num_vertices() << "v):" << (r.success ? "colored" : "failed")
                 << "/" << r.passes << "p";
        return r.success && check_edge_coloring(g, p.colors);
    };

    o.require(color(5, nullptr), "O_5 not 5-edge-colored");
    o.require(color(6, nullptr), "O_6 not 6-edge-colored");
    double t7 = 0.0;
    o.require(color(7, &t7), "O_7 not 7-edge-colored");
    o.detail << " O7 time=" << t7 << "s";
    o.require(t7 <= 600.0, "O_7 took more than 10 minutes");

    // Ground truth for the two negative cases.
    const Graph o3 = odd_graph(3);
    o.require(testing::naive_chromatic_index(o3) == 4, "O_3 chromatic index is not 4");
    const Graph o4 = odd_graph(4);
    o.require(o4.num_vertices() % 2 == 1, "O_4 does not have odd order");
    o.require(!color(3, nullptr), "O_3 reported colored with 3 colors");
    o.require(!color(4, nullptr), "O_4 reported colored with 4 colors");
    return o;
}

Outcome small_graph_oracle() {
    Outcome o;
    std::vector<testing::SmallGraph> graphs = testing::connected_graphs_up_to(8);
    graphs.insert(graphs.begin(), testing::SmallGraph{1, 0});  // K1
    // Connected graphs by edge count, 0..8 edges.
    const std::size_t known[] = {1, 1, 1, 3, 5, 12, 30, 79, 227};
    std::size_t per_m[9] = {};
    for (const auto& sg : graphs) ++per_m[sg.edges()];
    for (unsigned m = 0; m <= 8; ++m)
        o.require(per_m[m] == known[m], "enumeration count wrong for m=" + std::to_string(m));

    std::size_t class_one = 0, class_two = 0, weak = 0, false_success = 0;
    for (const auto& sg : graphs) {
        const Graph base = sg.to_graph();
        const std::size_t delta = base.max_degree();
        const std::size_t chi = testing::naive_chromatic_index(base);
        o.require(chi == delta || chi == delta + 1, "Vizing bound violated");
        o.require(brute_force_chromatic_index(base) == chi, "library chromatic index disagrees");
        int successes = 0;
        for (std::uint64_t s = 0; s < 20; ++s) {
            Graph g = base;
            HeuristicParams p;
            p.colors = static_cast<Color>(delta);
            p.seed = kSeed + s;
            const RunReport r = apply_heuristic(g, p);
            if (r.success) {
                ++successes;
                if (!check_edge_coloring(g, p.colors)) ++false_success;
            }
        }
        if (chi == delta) {
            ++class_one;
            if (successes < 19) ++weak;
        } else {
            ++class_two;
            // D = Δ < χ′ here: any success would be a false positive.
            false_success += static_cast<std::size_t>(successes);
        }
        // One color short of χ′ for class-one graphs is below Δ and must be refused.
        if (chi == delta && delta > 0) {
            Graph g = base;
            HeuristicParams p;
            p.colors = static_cast<Color>(delta - 1);
            try {
                if (apply_heuristic(g, p).success) ++false_success;
            } catch (const ParameterError&) {
            }
        }
    }
    o.detail << " graphs=" << graphs.size() << " class1=" << class_one << " class2=" << class_two
             << " below95%=" << weak << " successes_with_D<chi'=" << false_success;
    o.require(weak == 0, "some class-one graph succeeded in fewer than 19/20 runs");
    o.require(false_success == 0, "success reported with fewer colors than the chromatic index");
    return o;
}

Outcome property_suites() {
    Outcome o;
    const auto dict = testing::dictionary_consistency(10'000, kSeed);
    const auto start = testing::kempe_start_non_increase(10'000, kSeed + 1);
    const auto process = testing::kempe_process_bound(10'000, kSeed + 2);
    const auto determinism = testing::seed_determinism(100, kSeed + 3);
    auto report = [&](const char* name, const testing::PropertyResult& r) {
        o.detail << " " << name << "=" << r.checks - r.violations << "/" << r.checks;
        o.require(r.ok(), std::string(name) + ": " + r.first_failure);
    };
    report("dictionary", dict);
    report("kempe_start", start);
    report("kempe_process", process);
    report("determinism", determinism);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"AC1 random cubic success rate (n=100,1000,10000; >=29/30)", cubic_success_rate},
        {"AC2 cubic scaling avgTime(8000)/avgTime(1000) in [4,16]", cubic_scaling},
        {"AC3 cubic pass count flat (n=8000 avg <=3 and <=2x n=1000)", cubic_pass_flatness},
        {"AC4 regular sweep d=3,7,11,15 n=200,400,800", regular_sweep},
        {"AC5 odd graphs O_3..O_7", odd_graphs},
        {"AC6 oracle equivalence on connected graphs with <=8 edges", small_graph_oracle},
        {"AC7 property suites", property_suites},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s:%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str(),
                    secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
