#include "rectcarto/metaheuristics.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "rectcarto/error.hpp"
#include "rectcarto/metrics.hpp"
#include "rectcarto/parallel.hpp"
#include "rectcarto/random.hpp"

namespace rectcarto {

namespace {

double capped_inverse(double denominator) {
    if (!(denominator > 1.0 / kFitnessCap)) {
        return kFitnessCap;
    }
    return 1.0 / denominator;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t resolve_threads(bool parallel, std::size_t requested) {
    if (!parallel) {
        return 1;
    }
    return requested == 0 ? default_thread_count() : requested;
}

}  // namespace

FitnessKind parse_fitness_kind(std::string_view s) {
    if (s == "default" || s == "relpos") {
        return FitnessKind::relpos;
    }
    if (s == "weighted") {
        return FitnessKind::weighted;
    }
    throw ValidationError("unknown fitness '" + std::string(s) + "'");
}

double fitness_default(const Cartogram& cart) {
    if (cart.sentinel_count() > 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto& r : cart.regions) {
        sum += r.relpos_error;
    }
    return capped_inverse(sum);
}

double fitness_weighted(const Cartogram& cart, const std::array<double, 3>& weights) {
    if (cart.sentinel_count() > 0 || cart.size() == 0) {
        return 0.0;
    }
    int dt_max = 0;
    double relpos_sum = 0.0;
    for (const auto& r : cart.regions) {
        dt_max = std::max(dt_max, r.topology_error);
        relpos_sum += r.relpos_error;
    }
    // Each pair deviation appears in two per-region means of n-1 terms, so
    // the pairwise mean d_R equals the average per-region relpos error.
    const double d_r = relpos_sum / static_cast<double>(cart.size());
    const auto rects = cart.rects();
    const double d_e = (100.0 - screen_filling_pct(rects)) / 100.0;
    return capped_inverse(weights[0] * dt_max + weights[1] * d_r + weights[2] * d_e);
}

double evaluate(const Cartogram& cart, const FitnessSpec& spec) {
    return spec.kind == FitnessKind::relpos ? fitness_default(cart)
                                            : fitness_weighted(cart, spec.weights);
}

double evaluate(const CartogramBuilder& builder, const Permutation& order, const FitnessSpec& spec) {
    return evaluate(builder.build(order), spec);
}

namespace ga_ops {

std::vector<std::size_t> ordered_crossover(std::span<const std::size_t> parent_a,
                                           std::span<const std::size_t> parent_b, std::size_t lo,
                                           std::size_t hi) {
    const std::size_t n = parent_a.size();
    std::vector<std::size_t> child(n, n);
    std::vector<bool> used(n, false);
    for (std::size_t k = lo; k <= hi; ++k) {
        child[k] = parent_a[k];
        used[parent_a[k]] = true;
    }
    std::size_t slot = (hi + 1) % n;
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t gene = parent_b[(hi + 1 + step) % n];
        if (used[gene]) {
            continue;
        }
        child[slot] = gene;
        used[gene] = true;
        slot = (slot + 1) % n;
    }
    return child;
}

std::vector<double> linear_rank_weights(std::size_t n) {
    constexpr double pressure = 1.25;
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    if (n < 2) {
        return w;
    }
    for (std::size_t r = 0; r < n; ++r) {
        w[r] = (pressure - (2.0 * pressure - 2.0) * static_cast<double>(r) /
                               static_cast<double>(n - 1)) /
               static_cast<double>(n);
    }
    return w;
}

}  // namespace ga_ops

OptimizationResult run_ga(const CartogramBuilder& builder, const FitnessSpec& fitness,
                          const GAConfig& cfg) {
    const std::size_t n = builder.size();
    if (cfg.pop_size < 2) {
        throw ValidationError("population size must be at least 2");
    }
    if (cfg.max_iter < 1) {
        throw ValidationError("max_iter must be at least 1");
    }
    if (cfg.p_mutation < 0.0 || cfg.p_mutation > 1.0 || cfg.p_crossover < 0.0 ||
        cfg.p_crossover > 1.0) {
        throw ValidationError("probabilities must lie in [0, 1]");
    }
    const std::size_t elitism = std::min(cfg.elitism, cfg.pop_size);
    const std::size_t threads = resolve_threads(cfg.parallel_eval, cfg.threads);
    const auto start = Clock::now();
    Rng rng(cfg.seed);

    std::vector<Permutation> pop;
    pop.reserve(cfg.pop_size);
    pop.push_back(Permutation::identity(n));
    pop.push_back(Permutation::reversed(n));
    while (pop.size() < cfg.pop_size) {
        pop.push_back(Permutation::random(n, rng));
    }
    std::vector<double> fit(cfg.pop_size, 0.0);

    OptimizationResult result;
    auto evaluate_range = [&](std::size_t from) {
        parallel_for(cfg.pop_size - from, threads, [&](std::size_t k) {
            fit[from + k] = evaluate(builder, pop[from + k], fitness);
        });
        result.evaluations += cfg.pop_size - from;
    };
    evaluate_range(0);

    const std::vector<double> rank_w = ga_ops::linear_rank_weights(cfg.pop_size);
    std::vector<double> cumulative(rank_w.size());
    std::partial_sum(rank_w.begin(), rank_w.end(), cumulative.begin());

    std::vector<std::size_t> ranked(cfg.pop_size);
    auto rank_population = [&] {
        std::iota(ranked.begin(), ranked.end(), std::size_t{0});
        std::stable_sort(ranked.begin(), ranked.end(),
                         [&](std::size_t a, std::size_t b) { return fit[a] > fit[b]; });
    };

    for (std::size_t gen = 1;; ++gen) {
        rank_population();
        const std::size_t best = ranked.front();
        if (gen == 1 || fit[best] > result.best_fitness) {
            result.best_fitness = fit[best];
            result.best_perm = pop[best];
        }
        result.history.push_back({gen, result.best_fitness, seconds_since(start), result.evaluations});
        if (result.best_fitness >= cfg.max_fitness || gen >= cfg.max_iter) {
            break;
        }

        // Linear-rank roulette over the ranked population.
        auto select = [&]() -> const Permutation& {
            const double u = rng.uniform() * cumulative.back();
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            const auto r = static_cast<std::size_t>(
                std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                         static_cast<std::ptrdiff_t>(cfg.pop_size) - 1));
            return pop[ranked[r]];
        };

        std::vector<Permutation> next;
        std::vector<double> next_fit;
        next.reserve(cfg.pop_size);
        next_fit.reserve(cfg.pop_size);
        for (std::size_t e = 0; e < elitism; ++e) {
            next.push_back(pop[ranked[e]]);
            next_fit.push_back(fit[ranked[e]]);
        }
        while (next.size() < cfg.pop_size) {
            const Permutation& a = select();
            const Permutation& b = select();
            std::vector<std::size_t> c1(a.order().begin(), a.order().end());
            std::vector<std::size_t> c2(b.order().begin(), b.order().end());
            if (n >= 2 && rng.chance(cfg.p_crossover)) {
                std::size_t lo = rng.below(n);
                std::size_t hi = rng.below(n);
                if (lo > hi) {
                    std::swap(lo, hi);
                }
                c1 = ga_ops::ordered_crossover(a.order(), b.order(), lo, hi);
                c2 = ga_ops::ordered_crossover(b.order(), a.order(), lo, hi);
            }
            for (auto* child : {&c1, &c2}) {
                if (n >= 2 && rng.chance(cfg.p_mutation)) {
                    const std::size_t i = rng.below(n);
                    std::size_t j = rng.below(n - 1);
                    if (j >= i) {
                        ++j;
                    }
                    std::swap((*child)[i], (*child)[j]);
                }
                if (next.size() < cfg.pop_size) {
                    next.emplace_back(std::move(*child));
                    next_fit.push_back(0.0);
                }
            }
        }
        pop = std::move(next);
        fit = std::move(next_fit);
        evaluate_range(elitism);
    }

    result.cartogram = builder.build(result.best_perm);
    return result;
}

OptimizationResult run_ga(const InputMap& map, const FitnessSpec& fitness, const GAConfig& cfg) {
    return run_ga(CartogramBuilder(map), fitness, cfg);
}

OptimizationResult run_grasp(const CartogramBuilder& builder, const FitnessSpec& fitness,
                             const GRASPConfig& cfg) {
    if (cfg.iterations < 1) {
        throw ValidationError("GRASP needs at least one iteration");
    }
    const std::size_t n = builder.size();
    const std::size_t threads = resolve_threads(cfg.parallel_eval, cfg.threads);
    const auto start = Clock::now();

    struct Restart {
        Permutation perm;
        double fitness = 0.0;
        double finished = 0.0;
    };
    std::vector<Restart> restarts(cfg.iterations);

    parallel_for(cfg.iterations, threads, [&](std::size_t it) {
        Rng rng = Rng::stream(cfg.seed, it);
        Permutation current = Permutation::random(n, rng);
        double current_fit = evaluate(builder, current, fitness);
        if (n >= 2) {
            std::vector<std::size_t> order(current.order().begin(), current.order().end());
            for (std::size_t t = 0; t < cfg.local_search_budget; ++t) {
                const std::size_t i = rng.below(n - 1);
                std::swap(order[i], order[i + 1]);
                Permutation trial(order);
                const double f = evaluate(builder, trial, fitness);
                if (f > current_fit) {
                    current = std::move(trial);
                    current_fit = f;
                } else {
                    std::swap(order[i], order[i + 1]);
                }
            }
        }
        restarts[it] = {std::move(current), current_fit, seconds_since(start)};
    });

    OptimizationResult result;
    const std::size_t per_restart = 1 + (n >= 2 ? cfg.local_search_budget : 0);
    double elapsed = 0.0;
    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        const Restart& r = restarts[it];
        if (it == 0 || r.fitness > result.best_fitness) {
            result.best_fitness = r.fitness;
            result.best_perm = r.perm;
        }
        result.evaluations += per_restart;
        elapsed = std::max(elapsed, r.finished);
        result.history.push_back({it + 1, result.best_fitness, elapsed, result.evaluations});
    }
    result.cartogram = builder.build(result.best_perm);
    return result;
}

OptimizationResult run_grasp(const InputMap& map, const FitnessSpec& fitness,
                             const GRASPConfig& cfg) {
    return run_grasp(CartogramBuilder(map), fitness, cfg);
}

}  // namespace rectcarto
