#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rectcarto/cartogram.hpp"
#include "rectcarto/map_model.hpp"
#include "rectcarto/spatial_index.hpp"

namespace rectcarto {

/// Half-extents with the input aspect ratio dy/dx and area 4*dx*dy == desired_area.
[[nodiscard]] std::pair<double, double> scaled_extents(const InputRegion& input,
                                                       double desired_area);

/// Number of sweep positions tried around one anchor.
inline constexpr int kSweepPositions = 360;

/// Angular offset, in degrees, of sweep position k: 0, +1, -1, +2, -2, ..., -179, +180.
[[nodiscard]] constexpr int sweep_offset_degrees(int k) {
    if (k == 0) {
        return 0;
    }
    const int m = (k + 1) / 2;
    return k % 2 == 1 ? m : -m;
}

/// How one region was placed.
struct PlacementStep {
    std::size_t region = 0;
    std::size_t parent = 0;  // == region for the DFS root
    std::size_t anchor = 0;  // region the accepted position is tangent to
    int sweep_index = -1;    // accepted sweep position; -1 for root and fallback
    bool fallback = false;
};

struct ConstructStats {
    std::uint64_t intersection_calls = 0;
    std::size_t sentinel_regions = 0;
    bool record_trace = false;
    std::vector<PlacementStep> trace;  // in placement order, when record_trace
};

/// Depth-first rectangle placement over the input dual graph.
///
/// Holds everything that does not depend on the index order (validated map,
/// dual graph, target extents) so repeated constructions under different
/// orders only pay for the traversal. build() is const and reentrant.
class CartogramBuilder {
public:
    /// Throws ConnectivityError if the dual graph of `map` is disconnected.
    explicit CartogramBuilder(InputMap map);

    [[nodiscard]] const InputMap& map() const { return map_; }
    [[nodiscard]] const PseudoDualGraph& input_graph() const { return graph_; }
    [[nodiscard]] const std::vector<double>& desired_areas() const { return desired_; }
    [[nodiscard]] std::size_t size() const { return map_.size(); }

    /// Places every region once, in DFS order starting at order[0].
    ///
    /// A region is placed tangent to its DFS parent, starting at the input
    /// bearing and sweeping 0, +1, -1, +2, ... degrees up to 180. If no
    /// overlap-free position exists around the parent, the same sweep is
    /// repeated around every other already placed input neighbour (ascending
    /// order rank). If all fail, the region is put at the parent's input
    /// bearing despite the overlap, flagged with topology error 100, and the
    /// result is marked infeasible.
    [[nodiscard]] Cartogram build(const Permutation& order,
                                  IndexStrategy strategy = IndexStrategy::indexed,
                                  ConstructStats* stats = nullptr) const;

private:
    InputMap map_;
    PseudoDualGraph graph_;
    std::vector<double> desired_;
    std::vector<std::pair<double, double>> extents_;
    std::vector<Point> centers_;
};

/// One-shot construction; see CartogramBuilder::build.
[[nodiscard]] Cartogram construct(const InputMap& map, const Permutation& order,
                                  IndexStrategy strategy = IndexStrategy::indexed);

}  // namespace rectcarto
