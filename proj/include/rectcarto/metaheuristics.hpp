#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "rectcarto/cartogram.hpp"
#include "rectcarto/construction.hpp"
#include "rectcarto/map_model.hpp"

namespace rectcarto {

/// Fitness of a perfect layout (zero denominator).
inline constexpr double kFitnessCap = 1e12;

enum class FitnessKind {
    relpos,    // 1 / sum of per-region relative position errors
    weighted,  // 1 / (w_T * max topology + w_R * d_R + w_E * empty screen share)
};

struct FitnessSpec {
    FitnessKind kind = FitnessKind::relpos;
    std::array<double, 3> weights{0.2, 0.6, 0.2};  // (w_T, w_R, w_E)
};

[[nodiscard]] FitnessKind parse_fitness_kind(std::string_view s);

/// 0 if any region is a sentinel; otherwise 1 / sum(relpos_error), capped.
[[nodiscard]] double fitness_default(const Cartogram& cart);

/// 0 if any region is a sentinel; otherwise 1 / (w . (dT_max, dR, dE)), capped.
/// dT_max is the largest per-region topology error, dR the mean pairwise
/// bearing deviation and dE = (100 - screen filling %) / 100.
[[nodiscard]] double fitness_weighted(const Cartogram& cart, const std::array<double, 3>& weights);

[[nodiscard]] double evaluate(const Cartogram& cart, const FitnessSpec& spec);
[[nodiscard]] double evaluate(const CartogramBuilder& builder, const Permutation& order,
                              const FitnessSpec& spec);

struct GAConfig {
    std::size_t pop_size = 64;
    std::size_t max_iter = 1000;
    double max_fitness = std::numeric_limits<double>::infinity();
    double p_mutation = 0.25;
    double p_crossover = 0.8;
    std::size_t elitism = 1;
    std::uint64_t seed = 1;
    bool parallel_eval = false;
    std::size_t threads = 0;  // 0: default_thread_count()
};

struct GRASPConfig {
    std::size_t iterations = 100;
    std::size_t local_search_budget = 0;  // adjacent-swap trials per restart
    std::uint64_t seed = 1;
    bool parallel_eval = false;
    std::size_t threads = 0;
};

struct HistoryEntry {
    std::size_t step = 0;  // generation or iteration, 1-based
    double best_fitness = 0.0;
    double elapsed_seconds = 0.0;
    std::size_t evaluations = 0;  // cumulative constructions
};

struct OptimizationResult {
    Permutation best_perm;
    double best_fitness = 0.0;
    Cartogram cartogram;
    std::vector<HistoryEntry> history;
    std::size_t evaluations = 0;
};

/// Permutation-encoded genetic algorithm: linear-rank selection, ordered
/// crossover, swap mutation, elitism. The initial population holds the
/// identity and reverse orders plus uniform random permutations. Stops after
/// max_iter generations or once the best fitness reaches max_fitness.
[[nodiscard]] OptimizationResult run_ga(const CartogramBuilder& builder, const FitnessSpec& fitness,
                                        const GAConfig& cfg);
[[nodiscard]] OptimizationResult run_ga(const InputMap& map, const FitnessSpec& fitness,
                                        const GAConfig& cfg);

/// Multi-start search: each iteration samples a uniform random order and
/// hill-climbs with random adjacent swaps (accepted on strict improvement).
/// Iteration k draws from its own random stream, so results do not depend
/// on parallel scheduling.
[[nodiscard]] OptimizationResult run_grasp(const CartogramBuilder& builder,
                                           const FitnessSpec& fitness, const GRASPConfig& cfg);
[[nodiscard]] OptimizationResult run_grasp(const InputMap& map, const FitnessSpec& fitness,
                                           const GRASPConfig& cfg);

namespace ga_ops {

/// Ordered crossover: child keeps parent_a[lo..hi] in place and fills the
/// remaining slots, starting after hi and wrapping, with parent_b's genes in
/// parent_b order starting after hi.
[[nodiscard]] std::vector<std::size_t> ordered_crossover(std::span<const std::size_t> parent_a,
                                                         std::span<const std::size_t> parent_b,
                                                         std::size_t lo, std::size_t hi);

/// Selection probabilities for ranks 0 (best) .. n-1 with pressure 1.25.
[[nodiscard]] std::vector<double> linear_rank_weights(std::size_t n);

}  // namespace ga_ops

}  // namespace rectcarto
