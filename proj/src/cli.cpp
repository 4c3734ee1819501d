#include "cvd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "cvd/driver.hpp"
#include "cvd/generators.hpp"
#include "cvd/graph_io.hpp"
#include "cvd/verifier.hpp"

namespace cvd::cli {

namespace {

HeuristicParams params_for(const RunOptions& run, Color colors) {
    HeuristicParams p;
    p.colors = colors;
    p.repetition_limit = run.repetition_limit;
    p.iteration_limit = run.iteration_limit;
    p.seed = run.seed;
    p.precolor = run.precolor;
    return p;
}

void print_report(std::ostream& out, const Graph& g, Color colors, const RunReport& r) {
    out << "vertices: " << g.num_vertices() << '\n'
        << "edges: " << g.num_edges() << '\n'
        << "colors: " << colors << '\n'
        << "success: " << (r.success ? "true" : "false") << '\n'
        << "passes: " << r.passes << '\n'
        << "wall_time_s: " << std::setprecision(6) << r.wall_time_s << '\n'
        << "final_conflicts: " << r.final_conflicts << '\n'
        << "seed: " << r.seed << '\n';
}

}  // namespace

int cmd_color(const ColorOptions& opts, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = read_edge_list(opts.input);
    } catch (const ParseError& e) {
        err << "error: " << opts.input.string() << ": " << e.what() << '\n';
        return kIoError;
    }

    const Color colors = opts.run.colors.value_or(static_cast<Color>(g.max_degree()));
    RunReport report;
    try {
        report = apply_heuristic(g, params_for(opts.run, colors));
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    print_report(out, g, colors, report);
    if (!report.success) return kHeuristicFailure;

    std::ofstream file(opts.output);
    write_coloring(file, g);
    file.flush();
    if (!file) {
        err << "error: cannot write " << opts.output.string() << '\n';
        return kIoError;
    }
    return kSuccess;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    std::vector<BenchRecord> records;
    try {
        records = opts.jobs == 1 ? run_sweep_serial(opts.sweep)
                                 : run_sweep_parallel(opts.sweep, opts.jobs);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    const auto summaries = summarize(records);

    if (opts.csv) {
        std::ofstream file(*opts.csv);
        write_csv(file, records, summaries);
        file.flush();
        if (!file) {
            err << "error: cannot write " << opts.csv->string() << '\n';
            return kIoError;
        }
        for (const BenchSummary& s : summaries)
            out << "d=" << s.d << " n=" << s.n << " success_rate=" << s.success_rate
                << " passes_avg=" << s.passes.avg << " time_avg_s=" << s.time_s.avg << '\n';
    } else {
        write_csv(out, records, summaries);
    }
    return kSuccess;
}

int cmd_oddgraph(const OddGraphOptions& opts, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = odd_graph(opts.k);
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    const Color colors = opts.run.colors.value_or(static_cast<Color>(opts.k));
    RunReport report;
    try {
        report = apply_heuristic(g, params_for(opts.run, colors));
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    out << "k: " << opts.k << '\n';
    print_report(out, g, colors, report);
    return report.success ? kSuccess : kHeuristicFailure;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = read_edge_list(opts.graph);
    } catch (const ParseError& e) {
        err << "error: " << opts.graph.string() << ": " << e.what() << '\n';
        return kIoError;
    }
    const Color colors = opts.colors.value_or(static_cast<Color>(g.max_degree()));
    try {
        read_coloring(opts.coloring, g, colors);
    } catch (const ParseError& e) {
        err << "error: " << opts.coloring.string() << ": " << e.what() << '\n';
        return kIoError;
    } catch (const ColoringMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kColoringMismatch;
    } catch (const ColorOutOfRange& e) {
        err << "error: " << e.what() << '\n';
        return kColorOutOfRange;
    }

    if (check_edge_coloring(g, colors)) {
        out << "valid: true\n";
        return kSuccess;
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!properly_colored(g, v, colors)) {
            out << "valid: false\nfirst_clash_vertex: " << v << '\n';
            break;
        }
    }
    return kHeuristicFailure;
}

namespace {

void add_run_options(CLI::App* sub, RunOptions& run, std::string& precolor) {
    sub->add_option("-D,--colors", run.colors, "Number of colors (default: maximum degree)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("-R,--repetition-limit", run.repetition_limit,
                    "Non-improving chain starts tolerated per pass")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("-L,--iteration-limit", run.iteration_limit, "Maximum number of passes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", run.seed, "RNG seed")->capture_default_str();
    sub->add_option("--precolor", precolor, "Initial coloring")
        ->check(CLI::IsMember({"greedy", "random"}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge coloring by conflicting vertex displacement", "cvd"};
    app.require_subcommand(1);

    ColorOptions color_opts;
    std::string color_precolor = "greedy";
    auto* color = app.add_subcommand("color", "Color the edges of a graph file");
    color->add_option("input", color_opts.input, "Edge-list file")->required();
    color->add_option("-o,--output", color_opts.output, "Coloring output file")->required();
    add_run_options(color, color_opts.run, color_precolor);

    BenchOptions bench_opts;
    std::string bench_precolor = "greedy";
    RunOptions bench_run;
    auto* bench = app.add_subcommand("bench", "Sweep random regular graphs and emit CSV");
    bench->add_option("--degrees", bench_opts.sweep.degrees, "Degrees to sweep")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--sizes", bench_opts.sweep.sizes, "Vertex counts to sweep")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--instances", bench_opts.sweep.instances, "Graphs per (d,n)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--csv", bench_opts.csv, "CSV output file (default: stdout)");
    bench->add_option("-j,--jobs", bench_opts.jobs, "Threads; 1 runs the serial sweep, 0 = all")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_run_options(bench, bench_run, bench_precolor);

    OddGraphOptions odd_opts;
    std::string odd_precolor = "greedy";
    auto* odd = app.add_subcommand("oddgraph", "Build the odd graph O_k and color it");
    odd->add_option("k", odd_opts.k, "Odd graph order parameter (k >= 2)")->required();
    add_run_options(odd, odd_opts.run, odd_precolor);

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Check a coloring file against a graph");
    verify->add_option("graph", verify_opts.graph, "Edge-list file")->required();
    verify->add_option("coloring", verify_opts.coloring, "Coloring file")->required();
    verify->add_option("-D,--colors", verify_opts.colors, "Number of colors (default: maximum degree)")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    if (*color) {
        color_opts.run.precolor = parse_precolor_mode(color_precolor);
        return cmd_color(color_opts, out, err);
    }
    if (*bench) {
        if (bench_run.colors)
            err << "note: bench always colors with D = d; --colors ignored\n";
        bench_opts.sweep.repetition_limit = bench_run.repetition_limit;
        bench_opts.sweep.iteration_limit = bench_run.iteration_limit;
        bench_opts.sweep.seed = bench_run.seed;
        bench_opts.sweep.precolor = parse_precolor_mode(bench_precolor);
        return cmd_bench(bench_opts, out, err);
    }
    if (*odd) {
        odd_opts.run.precolor = parse_precolor_mode(odd_precolor);
        return cmd_oddgraph(odd_opts, out, err);
    }
    return cmd_verify(verify_opts, out, err);
}

}  // namespace cvd::cli
