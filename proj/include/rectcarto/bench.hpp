#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rectcarto/spatial_index.hpp"

namespace rectcarto {

struct BenchRecord {
    std::size_t board_n = 0;
    std::size_t n_regions = 0;
    IndexStrategy strategy = IndexStrategy::indexed;
    std::size_t run_index = 0;
    std::uint64_t intersection_calls = 0;
    double elapsed_seconds = 0.0;
    bool feasible = false;
};

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::size_t runs_per_size = 1;
    std::vector<IndexStrategy> strategies{IndexStrategy::naive, IndexStrategy::indexed};
    std::uint64_t seed = 1;
    bool parallel = false;
    std::size_t threads = 0;
};

/// Constructs checkerboard(size) once per (size, run, strategy). All strategies
/// of a (size, run) cell share one random order drawn from stream
/// (seed, size * 1'000'003 + run). Only the construction call is timed.
/// Records are ordered by size, run, then strategy as listed in the options.
[[nodiscard]] std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// CSV with header board_n,n_regions,strategy,run_index,intersection_calls,elapsed_seconds,feasible
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace rectcarto
