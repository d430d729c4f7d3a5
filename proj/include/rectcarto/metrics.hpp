#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rectcarto/cartogram.hpp"
#include "rectcarto/map_model.hpp"

namespace rectcarto {

struct BoundingBox {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
};

/// The summary block. Topology and relative position are empty when an
/// input map is summarised on its own.
struct SummaryStats {
    std::size_t n_regions = 0;
    double area_error = 0.0;
    std::optional<std::size_t> topology_error;
    std::size_t sentinel_regions = 0;
    std::optional<double> relative_position_error;
    double screen_filling_pct = 0.0;
    BoundingBox bbox;
};

struct RegionErrors {
    std::vector<int> topology;
    std::vector<double> relpos;
    std::vector<double> relposnh;
};

/// Sum of |A_j - desired_j|.
[[nodiscard]] double d_A(const InputMap& input, const Cartogram& cart);
/// Sum of |dy/dx - dy'/dx'|.
[[nodiscard]] double d_S(const InputMap& input, const Cartogram& cart);
/// Symmetric edge difference over edge union; 0 when both graphs are empty.
[[nodiscard]] double d_T(const PseudoDualGraph& input_graph, const PseudoDualGraph& output_graph);
[[nodiscard]] double d_T(const InputMap& input, const Cartogram& cart);
/// Mean wrapped bearing deviation over all unordered pairs. Needs n >= 2.
[[nodiscard]] double d_R(std::span<const Point> input_centers, std::span<const Point> output_centers);
[[nodiscard]] double d_R(const InputMap& input, const Cartogram& cart);

/// Graph of the placed rectangles (closed touching with kTouchSlack).
[[nodiscard]] PseudoDualGraph output_graph(const Cartogram& cart);

/// Per-region diagnostics:
///   topology[j] = |N_in(j) symmetric-difference N_out(j)|
///   relpos[j]   = mean over i != j of the wrapped bearing deviation
///   relposnh[j] = same mean restricted to input neighbours (0 if none)
[[nodiscard]] RegionErrors per_region_errors(std::span<const Point> input_centers,
                                             std::span<const Point> output_centers,
                                             const PseudoDualGraph& input_graph,
                                             const PseudoDualGraph& output_graph);

/// z-weighted mean of |A - desired| / (A + desired) over regions.
[[nodiscard]] double area_error(std::span<const double> areas, std::span<const double> desired,
                                std::span<const double> z);

[[nodiscard]] BoundingBox bounding_box(std::span<const Rect> rects);
[[nodiscard]] double screen_filling_pct(std::span<const Rect> rects);

[[nodiscard]] SummaryStats summarize(const InputMap& input, const Cartogram& cart);
/// Summary of the input map itself (area error against its own z targets).
[[nodiscard]] SummaryStats summarize(const InputMap& input);

}  // namespace rectcarto
