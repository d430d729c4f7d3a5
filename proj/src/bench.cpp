#include "rectcarto/bench.hpp"

#include <chrono>
#include <ostream>

#include "rectcarto/construction.hpp"
#include "rectcarto/error.hpp"
#include "rectcarto/format.hpp"
#include "rectcarto/parallel.hpp"

namespace rectcarto {

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
    if (options.runs_per_size < 1) {
        throw ValidationError("runs per size must be at least 1");
    }
    if (options.strategies.empty()) {
        throw ValidationError("no index strategy selected");
    }
    struct Cell {
        std::size_t size;
        std::size_t run;
    };
    std::vector<Cell> cells;
    for (std::size_t size : options.sizes) {
        if (size < 2) {
            throw ValidationError("checkerboard size must be at least 2");
        }
        for (std::size_t run = 0; run < options.runs_per_size; ++run) {
            cells.push_back({size, run});
        }
    }

    std::vector<CartogramBuilder> builders;
    std::vector<std::size_t> builder_of(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == 0 || cells[c].size != cells[c - 1].size) {
            builders.emplace_back(checkerboard(cells[c].size));
        }
        builder_of[c] = builders.size() - 1;
    }

    const std::size_t per_cell = options.strategies.size();
    std::vector<BenchRecord> records(cells.size() * per_cell);
    const std::size_t threads =
        options.parallel ? (options.threads ? options.threads : default_thread_count()) : 1;

    parallel_for(cells.size(), threads, [&](std::size_t c) {
        const auto [size, run] = cells[c];
        const CartogramBuilder& builder = builders[builder_of[c]];
        Rng rng = Rng::stream(options.seed, size * 1'000'003ULL + run);
        const Permutation order = Permutation::random(builder.size(), rng);
        for (std::size_t s = 0; s < per_cell; ++s) {
            ConstructStats stats;
            const auto t0 = std::chrono::steady_clock::now();
            const Cartogram cart = builder.build(order, options.strategies[s], &stats);
            const auto t1 = std::chrono::steady_clock::now();
            records[c * per_cell + s] = {size,
                                         size * size,
                                         options.strategies[s],
                                         run + 1,
                                         stats.intersection_calls,
                                         std::chrono::duration<double>(t1 - t0).count(),
                                         cart.feasible};
        }
    });
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "board_n,n_regions,strategy,run_index,intersection_calls,elapsed_seconds,feasible\n";
    for (const auto& r : records) {
        out << r.board_n << ',' << r.n_regions << ',' << to_string(r.strategy) << ','
            << r.run_index << ',' << r.intersection_calls << ','
            << format_double(r.elapsed_seconds) << ',' << (r.feasible ? "true" : "false") << '\n';
    }
}

}  // namespace rectcarto
