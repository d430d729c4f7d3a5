#include <sstream>
#include <string>

#include "doctest.h"
#include "rectcarto/bench.hpp"
#include "rectcarto/construction.hpp"
#include "rectcarto/random.hpp"

using namespace rectcarto;

TEST_CASE("one size, one run") {
    BenchOptions opt;
    opt.sizes = {2};
    opt.runs_per_size = 1;
    const auto records = run_bench(opt);
    REQUIRE(records.size() == 2);
    CHECK(records[0].strategy == IndexStrategy::naive);
    CHECK(records[1].strategy == IndexStrategy::indexed);
    for (const auto& r : records) {
        CHECK(r.board_n == 2);
        CHECK(r.n_regions == 4);
        CHECK(r.run_index == 1);
        CHECK(r.intersection_calls > 0);
        CHECK(r.elapsed_seconds >= 0.0);
        CHECK(r.feasible);
    }
}

TEST_CASE("naive never needs fewer tests than indexed") {
    BenchOptions opt;
    opt.sizes = {3, 5, 7};
    opt.runs_per_size = 10;
    opt.seed = 8;
    const auto records = run_bench(opt);
    REQUIRE(records.size() == 3 * 10 * 2);
    for (std::size_t k = 0; k < records.size(); k += 2) {
        CHECK(records[k].board_n == records[k + 1].board_n);
        CHECK(records[k].run_index == records[k + 1].run_index);
        CHECK(records[k].intersection_calls >= records[k + 1].intersection_calls);
        CHECK(records[k].feasible == records[k + 1].feasible);
        CHECK(records[k].n_regions == records[k].board_n * records[k].board_n);
    }

    opt.parallel = true;
    opt.threads = 3;
    const auto par = run_bench(opt);
    REQUIRE(par.size() == records.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
        CHECK(par[k].intersection_calls == records[k].intersection_calls);
    }
}

TEST_CASE("strategies agree on the layout") {
    const InputMap board = checkerboard(6);
    const CartogramBuilder builder(board);
    Rng rng(2);
    for (int run = 0; run < 20; ++run) {
        const Permutation order = Permutation::random(board.size(), rng);
        const auto a = builder.build(order, IndexStrategy::naive);
        const auto b = builder.build(order, IndexStrategy::indexed);
        for (std::size_t k = 0; k < board.size(); ++k) {
            REQUIRE(a.regions[k].rect == b.regions[k].rect);
            REQUIRE(a.regions[k].dfs_num == b.regions[k].dfs_num);
        }
    }
}

TEST_CASE("bench csv") {
    BenchOptions opt;
    opt.sizes = {2, 3};
    opt.runs_per_size = 2;
    opt.strategies = {IndexStrategy::indexed};
    std::ostringstream os;
    write_bench_csv(os, run_bench(opt));
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "board_n,n_regions,strategy,run_index,intersection_calls,elapsed_seconds,feasible");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(line.find(",indexed,") != std::string::npos);
    }
    CHECK(rows == 4);
}
