#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace rectcarto {

/// xoshiro256** seeded through splitmix64.
///
/// All derived draws (bounded integers, doubles, shuffles) are implemented
/// here rather than through <random> distributions, whose output is not
/// specified across standard libraries. A given seed yields the same stream
/// on every platform.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    result_type operator()();
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Bernoulli draw with probability p.
    bool chance(double p) { return uniform() < p; }

    /// Independent generator for sub-stream `stream` of this seed.
    [[nodiscard]] static Rng stream(std::uint64_t seed, std::uint64_t stream);

    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = below(i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace rectcarto
