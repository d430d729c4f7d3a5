#include "rectcarto/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rectcarto/bench.hpp"
#include "rectcarto/construction.hpp"
#include "rectcarto/error.hpp"
#include "rectcarto/format.hpp"
#include "rectcarto/io.hpp"
#include "rectcarto/metaheuristics.hpp"
#include "rectcarto/metrics.hpp"
#include "rectcarto/render.hpp"

namespace rectcarto {

namespace {

void print_row(std::ostream& out, const std::string& label, const std::string& value) {
    out << std::left << std::setw(28) << label << std::right << std::setw(16) << value << '\n';
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Permutation resolve_order(const std::vector<std::string>& spec, std::size_t n) {
    if (spec.empty() || spec[0] == "identity") {
        return Permutation::identity(n);
    }
    if (spec[0] == "reverse") {
        return Permutation::reversed(n);
    }
    if (spec[0] == "file" && spec.size() == 2) {
        return read_order(spec[1], n);
    }
    if (spec[0] == "seed" && spec.size() == 2) {
        std::uint64_t seed = 0;
        try {
            std::size_t pos = 0;
            seed = std::stoull(spec[1], &pos);
            if (pos != spec[1].size()) {
                throw std::invalid_argument(spec[1]);
            }
        } catch (const std::exception&) {
            throw ValidationError("--order seed expects a non-negative integer");
        }
        Rng rng(seed);
        return Permutation::random(n, rng);
    }
    throw ValidationError("--order expects identity, reverse, file <path> or seed <N>");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    auto to_size = [&](const std::string& s) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != s.size()) {
            throw ValidationError("bad size '" + s + "' in --sizes");
        }
        return static_cast<std::size_t>(v);
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const std::size_t lo = to_size(item.substr(0, dots));
            const std::size_t hi = to_size(item.substr(dots + 2));
            for (std::size_t k = lo; k <= hi; ++k) {
                sizes.push_back(k);
            }
        } else {
            sizes.push_back(to_size(item));
        }
    }
    if (sizes.empty()) {
        throw ValidationError("--sizes is empty");
    }
    return sizes;
}

void write_outputs(const Cartogram& cart, const RegionTable& table, const std::string& out_path,
                   const std::string& format, const std::string& svg_path,
                   const std::string& color_by) {
    if (!out_path.empty()) {
        OutputFormat f = format_for(out_path);
        if (format == "csv") {
            f = OutputFormat::csv;
        } else if (format == "geojson") {
            f = OutputFormat::geojson;
        }
        write_cartogram(cart, table.map, out_path, f);
    }
    if (!svg_path.empty()) {
        SvgOptions opts;
        opts.color_by = color_by;
        render_svg(cart, svg_path, opts, table.extra);
    }
}

}  // namespace

void print_summary(std::ostream& out, const SummaryStats& s) {
    print_row(out, "", "values");
    print_row(out, "number of map regions", fixed6(static_cast<double>(s.n_regions)));
    print_row(out, "area error", fixed6(s.area_error));
    print_row(out, "topology error",
              s.topology_error ? fixed6(static_cast<double>(*s.topology_error)) : "NA");
    print_row(out, "relative position error",
              s.relative_position_error ? fixed6(*s.relative_position_error) : "NA");
    print_row(out, "screen filling [in %]", fixed6(s.screen_filling_pct));
    print_row(out, "xmin", fixed6(s.bbox.xmin));
    print_row(out, "xmax", fixed6(s.bbox.xmax));
    print_row(out, "ymin", fixed6(s.bbox.ymin));
    print_row(out, "ymax", fixed6(s.bbox.ymax));
    if (s.sentinel_regions > 0) {
        print_row(out, "unplaceable regions", fixed6(static_cast<double>(s.sentinel_regions)));
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rectangular statistical cartograms (value-by-area maps)", "rectcarto"};
    app.require_subcommand(1);

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Build one cartogram for a given order");
    std::string map_path;
    std::vector<std::string> order_spec;
    std::string strategy = "indexed";
    std::string out_path;
    std::string out_format;
    std::string svg_path;
    std::string color_by;
    construct_cmd->add_option("--map", map_path, "Input CSV (x,y,dx,dy,z,name)")->required();
    construct_cmd->add_option("--order", order_spec, "identity | reverse | file PATH | seed N")
        ->expected(1, 2);
    construct_cmd->add_option("--strategy", strategy, "naive | indexed")
        ->check(CLI::IsMember({"naive", "indexed"}));
    construct_cmd->add_option("--out", out_path, "Output cartogram (.csv or .geojson)");
    construct_cmd->add_option("--format", out_format, "csv | geojson (default: by extension)")
        ->check(CLI::IsMember({"csv", "geojson"}));
    construct_cmd->add_option("--svg", svg_path, "Write an SVG rendering");
    construct_cmd->add_option("--color-by", color_by, "Column used to colour the SVG");

    // optimize
    auto* optimize_cmd = app.add_subcommand("optimize", "Search index orders with GA or GRASP");
    std::string metaheuristic = "ga";
    std::string fitness_name = "default";
    GAConfig ga;
    ga.max_fitness = 1.7;
    GRASPConfig grasp;
    std::uint64_t seed = 1;
    bool parallel = false;
    std::size_t threads = 0;
    std::string history_path;
    bool history_timing = false;
    optimize_cmd->add_option("--map", map_path, "Input CSV")->required();
    optimize_cmd->add_option("--metaheuristic", metaheuristic, "ga | grasp")
        ->check(CLI::IsMember({"ga", "grasp"}));
    optimize_cmd->add_option("--fitness", fitness_name, "default | weighted")
        ->check(CLI::IsMember({"default", "weighted"}));
    optimize_cmd->add_option("--pop-size", ga.pop_size, "GA population size")->capture_default_str();
    optimize_cmd->add_option("--max-iter", ga.max_iter, "GA generations")->capture_default_str();
    optimize_cmd->add_option("--max-fitness", ga.max_fitness, "GA stop threshold")
        ->capture_default_str();
    optimize_cmd->add_option("--pmutation", ga.p_mutation, "GA mutation probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    optimize_cmd->add_option("--pcrossover", ga.p_crossover, "GA crossover probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    optimize_cmd->add_option("--elitism", ga.elitism, "GA elite count")->capture_default_str();
    optimize_cmd->add_option("--iterations", grasp.iterations, "GRASP restarts")
        ->capture_default_str();
    optimize_cmd->add_option("--local-search-budget", grasp.local_search_budget,
                             "GRASP swap trials per restart")
        ->capture_default_str();
    optimize_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    optimize_cmd->add_flag("--parallel", parallel, "Evaluate fitness on several threads");
    optimize_cmd->add_option("--threads", threads, "Worker threads (default: RECTCARTO_THREADS or all cores)");
    optimize_cmd->add_option("--out", out_path, "Output cartogram (.csv or .geojson)");
    optimize_cmd->add_option("--format", out_format, "csv | geojson")
        ->check(CLI::IsMember({"csv", "geojson"}));
    optimize_cmd->add_option("--svg", svg_path, "Write an SVG rendering");
    optimize_cmd->add_option("--color-by", color_by, "Column used to colour the SVG");
    optimize_cmd->add_option("--history-out", history_path, "Best fitness per generation (CSV)");
    optimize_cmd->add_flag("--history-timing", history_timing,
                           "Add wall-clock seconds to the history file");

    // checkerboard
    auto* checker_cmd = app.add_subcommand("checkerboard", "Write an n x n checkerboard map");
    std::size_t board_n = 8;
    checker_cmd->add_option("--n", board_n, "Board size")->capture_default_str();
    checker_cmd->add_option("--out", out_path, "Output CSV (default: stdout)");

    // summary
    auto* summary_cmd = app.add_subcommand("summary", "Print summary statistics");
    std::string cart_path;
    summary_cmd->add_option("--map", map_path, "Input CSV")->required();
    summary_cmd->add_option("--cartogram", cart_path, "Cartogram CSV to compare against the map");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Intersection-call and timing benchmark");
    std::string sizes_text = "2..20";
    std::size_t runs = 100;
    std::vector<std::string> strategies{"naive", "indexed"};
    bench_cmd->add_option("--sizes", sizes_text, "Board sizes, e.g. 2..20 or 4,8,12")
        ->capture_default_str();
    bench_cmd->add_option("--runs", runs, "Random orders per size")->capture_default_str();
    bench_cmd->add_option("--strategies", strategies, "naive,indexed")
        ->delimiter(',')
        ->check(CLI::IsMember({"naive", "indexed"}));
    bench_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    bench_cmd->add_flag("--parallel", parallel, "Run cells on several threads");
    bench_cmd->add_option("--out", out_path, "Output CSV (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        if (construct_cmd->parsed()) {
            const RegionTable table = read_region_table(map_path);
            const CartogramBuilder builder(table.map);
            const Permutation order = resolve_order(order_spec, builder.size());
            const Cartogram cart = builder.build(order, parse_index_strategy(strategy));
            write_outputs(cart, table, out_path, out_format, svg_path, color_by);
            print_summary(out, summarize(table.map, cart));
            out << "feasible " << (cart.feasible ? "yes" : "no") << '\n';
        } else if (optimize_cmd->parsed()) {
            const RegionTable table = read_region_table(map_path);
            const CartogramBuilder builder(table.map);
            FitnessSpec spec;
            spec.kind = parse_fitness_kind(fitness_name);
            OptimizationResult result;
            if (metaheuristic == "ga") {
                ga.seed = seed;
                ga.parallel_eval = parallel;
                ga.threads = threads;
                result = run_ga(builder, spec, ga);
            } else {
                grasp.seed = seed;
                grasp.parallel_eval = parallel;
                grasp.threads = threads;
                result = run_grasp(builder, spec, grasp);
            }
            write_outputs(result.cartogram, table, out_path, out_format, svg_path, color_by);
            if (!history_path.empty()) {
                std::ofstream h(history_path, std::ios::binary);
                if (!h) {
                    throw IoError("cannot write '" + history_path + "'");
                }
                h << "step,best_fitness,evaluations" << (history_timing ? ",elapsed_seconds" : "")
                  << '\n';
                for (const auto& e : result.history) {
                    h << e.step << ',' << format_double(e.best_fitness) << ',' << e.evaluations;
                    if (history_timing) {
                        h << ',' << format_double(e.elapsed_seconds);
                    }
                    h << '\n';
                }
                if (!h) {
                    throw IoError("error while writing '" + history_path + "'");
                }
            }
            print_summary(out, summarize(table.map, result.cartogram));
            out << "best fitness " << format_double(result.best_fitness) << '\n';
            out << "evaluations " << result.evaluations << '\n';
            out << "order";
            for (std::size_t k = 0; k < result.best_perm.size(); ++k) {
                out << ' ' << result.best_perm[k] + 1;
            }
            out << '\n';
        } else if (checker_cmd->parsed()) {
            const InputMap board = checkerboard(board_n);
            if (out_path.empty()) {
                write_map_csv(out, board);
            } else {
                write_map(board, out_path);
            }
        } else if (summary_cmd->parsed()) {
            const RegionTable table = read_region_table(map_path);
            if (cart_path.empty()) {
                print_summary(out, summarize(table.map));
            } else {
                print_summary(out, summarize(table.map, read_cartogram(cart_path)));
            }
        } else if (bench_cmd->parsed()) {
            BenchOptions opts;
            opts.sizes = parse_sizes(sizes_text);
            opts.runs_per_size = runs;
            opts.strategies.clear();
            for (const auto& s : strategies) {
                opts.strategies.push_back(parse_index_strategy(s));
            }
            opts.seed = seed;
            opts.parallel = parallel;
            const auto records = run_bench(opts);
            if (out_path.empty()) {
                write_bench_csv(out, records);
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) {
                    throw IoError("cannot write '" + out_path + "'");
                }
                write_bench_csv(f, records);
                if (!f) {
                    throw IoError("error while writing '" + out_path + "'");
                }
            }
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace rectcarto
