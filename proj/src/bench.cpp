#include "cvd/bench.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>
#include <tuple>

#include <omp.h>

#include "cvd/driver.hpp"
#include "cvd/generators.hpp"
#include "cvd/verifier.hpp"

namespace cvd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Job {
    std::size_t d, n, instance;
};

std::vector<Job> jobs_for(const SweepConfig& config) {
    auto degrees = config.degrees;
    auto sizes = config.sizes;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    std::vector<Job> jobs;
    for (std::size_t d : degrees)
        for (std::size_t n : sizes)
            for (std::size_t i = 0; i < config.instances; ++i) jobs.push_back({d, n, i});
    return jobs;
}

Stat stat_of(const std::vector<double>& xs) {
    if (xs.empty()) return {};
    Stat s{std::numeric_limits<double>::infinity(), 0.0, -std::numeric_limits<double>::infinity()};
    for (double x : xs) {
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
        s.avg += x;
    }
    s.avg /= static_cast<double>(xs.size());
    return s;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::size_t d, std::size_t n, std::size_t instance) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ d);
    h = splitmix64(h ^ n);
    return splitmix64(h ^ instance);
}

void validate_sweep(const SweepConfig& config) {
    for (std::size_t d : config.degrees)
        for (std::size_t n : config.sizes) {
            if ((n * d) % 2 != 0 || d >= n || d == 0)
                throw ParameterError("no random " + std::to_string(d) + "-regular graph on " +
                                     std::to_string(n) + " vertices");
        }
    if (config.repetition_limit < 0) throw ParameterError("repetition limit must be >= 0");
    if (config.iteration_limit < 1) throw ParameterError("iteration limit must be >= 1");
}

BenchRecord run_instance(const SweepConfig& config, std::size_t d, std::size_t n,
                         std::size_t instance) {
    BenchRecord rec;
    rec.d = d;
    rec.n = n;
    rec.instance = instance;
    rec.seed = derive_seed(config.seed, d, n, instance);

    Rng graph_rng(rec.seed);
    Graph g = random_regular_graph(n, d, graph_rng);

    HeuristicParams params;
    params.colors = static_cast<Color>(d);
    params.repetition_limit = config.repetition_limit;
    params.iteration_limit = config.iteration_limit;
    params.seed = splitmix64(rec.seed);
    params.precolor = config.precolor;
    const RunReport report = apply_heuristic(g, params);

    rec.success = report.success;
    rec.verified = report.success && check_edge_coloring_serial(g, params.colors);
    rec.passes = report.passes;
    rec.wall_time_s = report.wall_time_s;
    rec.time_per_pass_s = report.wall_time_s / report.passes;
    return rec;
}

std::vector<BenchRecord> run_sweep_serial(const SweepConfig& config) {
    validate_sweep(config);
    std::vector<BenchRecord> records;
    for (const Job& job : jobs_for(config))
        records.push_back(run_instance(config, job.d, job.n, job.instance));
    return records;
}

std::vector<BenchRecord> run_sweep_parallel(const SweepConfig& config, int threads) {
    validate_sweep(config);
    const std::vector<Job> jobs = jobs_for(config);
    std::vector<BenchRecord> records(jobs.size());
    std::exception_ptr failure;
    if (threads <= 0) threads = omp_get_max_threads();
    const auto count = static_cast<std::int64_t>(jobs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const Job& job = jobs[static_cast<std::size_t>(i)];
            records[static_cast<std::size_t>(i)] = run_instance(config, job.d, job.n, job.instance);
        } catch (...) {
#pragma omp critical(cvd_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<BenchSummary> summarize(std::span<const BenchRecord> records) {
    std::vector<BenchSummary> out;
    std::size_t i = 0;
    while (i < records.size()) {
        std::size_t j = i;
        std::vector<double> passes, times, per_pass;
        BenchSummary s;
        s.d = records[i].d;
        s.n = records[i].n;
        for (; j < records.size() && records[j].d == s.d && records[j].n == s.n; ++j) {
            passes.push_back(records[j].passes);
            times.push_back(records[j].wall_time_s);
            per_pass.push_back(records[j].time_per_pass_s);
            if (records[j].success && records[j].verified) ++s.successes;
        }
        s.runs = j - i;
        s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.runs);
        s.passes = stat_of(passes);
        s.time_s = stat_of(times);
        s.time_per_pass_s = stat_of(per_pass);
        out.push_back(s);
        i = j;
    }
    return out;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records,
               std::span<const BenchSummary> summaries) {
    out << "kind,d,n,instance,seed,success,passes,wall_time_s,time_per_pass_s,"
           "runs,success_rate,passes_min,passes_avg,passes_max,"
           "time_min_s,time_avg_s,time_max_s,tpp_min_s,tpp_avg_s,tpp_max_s\n";
    const auto old_flags = out.flags();
    const auto old_precision = out.precision();
    out << std::setprecision(9);
    for (const BenchRecord& r : records) {
        out << "run," << r.d << ',' << r.n << ',' << r.instance << ',' << r.seed << ','
            << (r.success && r.verified ? 1 : 0) << ',' << r.passes << ',' << r.wall_time_s << ','
            << r.time_per_pass_s << ",,,,,,,,,,,\n";
    }
    for (const BenchSummary& s : summaries) {
        out << "summary," << s.d << ',' << s.n << ",,,,,,," << s.runs << ',' << s.success_rate
            << ',' << s.passes.min << ',' << s.passes.avg << ',' << s.passes.max << ','
            << s.time_s.min << ',' << s.time_s.avg << ',' << s.time_s.max << ','
            << s.time_per_pass_s.min << ',' << s.time_per_pass_s.avg << ','
            << s.time_per_pass_s.max << '\n';
    }
    out.flags(old_flags);
    out.precision(old_precision);
}

}  // namespace cvd
