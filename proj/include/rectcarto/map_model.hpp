#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rectcarto/geometry.hpp"
#include "rectcarto/random.hpp"

namespace rectcarto {

/// One region of the input map: projected center, half-extents, statistical value.
struct InputRegion {
    double x = 0.0;
    double y = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    double z = 0.0;
    std::string name;

    [[nodiscard]] Rect rect() const { return {x, y, dx, dy}; }
    [[nodiscard]] Point center() const { return {x, y}; }
};

/// Validated, immutable list of input regions. Row order is the identity ordering.
class InputMap {
public:
    /// Throws ValidationError on empty input, non-finite coordinates,
    /// non-positive dx/dy/z or duplicate names. Empty names are replaced by
    /// "region_<k>" (1-based row number).
    explicit InputMap(std::vector<InputRegion> regions);

    [[nodiscard]] std::size_t size() const { return regions_.size(); }
    [[nodiscard]] const InputRegion& operator[](std::size_t i) const { return regions_[i]; }
    [[nodiscard]] std::span<const InputRegion> regions() const { return regions_; }
    [[nodiscard]] auto begin() const { return regions_.begin(); }
    [[nodiscard]] auto end() const { return regions_.end(); }

    [[nodiscard]] std::vector<Rect> rects() const;

private:
    std::vector<InputRegion> regions_;
};

/// Undirected graph over region indices. Edges are stored with i < j, sorted.
struct PseudoDualGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> adjacency;  // ascending neighbour ids

    [[nodiscard]] bool has_edge(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::vector<std::vector<std::size_t>> components() const;
    [[nodiscard]] bool connected() const { return n <= 1 || components().size() == 1; }
};

/// Edges wherever closed boxes touch or overlap, grown by `slack`.
[[nodiscard]] PseudoDualGraph touching_graph(std::span<const Rect> rects, double slack = 0.0);

/// Input dual graph; throws ConnectivityError listing the components when
/// the graph is not connected.
[[nodiscard]] PseudoDualGraph build_dual_graph(const InputMap& map);

/// Target area per region: z_j * sum(A) / sum(z).
[[nodiscard]] std::vector<double> desired_areas(const InputMap& map);

/// n x n unit cells centered at (i, j), i, j in 1..n; z = 4 where i + j is
/// even, z = 1 otherwise. Cells are emitted row by row (j outer, i inner).
[[nodiscard]] InputMap checkerboard(std::size_t n);

/// A bijection over 0..n-1 giving the exploration order of the regions.
class Permutation {
public:
    Permutation() = default;
    /// Throws ValidationError unless `order` is a permutation of 0..n-1.
    explicit Permutation(std::vector<std::size_t> order);

    [[nodiscard]] static Permutation identity(std::size_t n);
    [[nodiscard]] static Permutation reversed(std::size_t n);
    [[nodiscard]] static Permutation random(std::size_t n, Rng& rng);

    [[nodiscard]] std::size_t size() const { return order_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t k) const { return order_[k]; }
    [[nodiscard]] std::span<const std::size_t> order() const { return order_; }

    /// rank[region] = position of region in the order.
    [[nodiscard]] std::vector<std::size_t> ranks() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> order_;
};

}  // namespace rectcarto
