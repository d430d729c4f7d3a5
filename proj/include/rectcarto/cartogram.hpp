#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rectcarto/geometry.hpp"

namespace rectcarto {

/// topology_error value reported for a region that could only be placed with overlap.
inline constexpr int kSentinelTopologyError = 100;

struct PlacedRegion {
    Rect rect;
    std::string name;
    double z = 0.0;
    std::size_t dfs_num = 0;  // 1-based placement order
    int topology_error = 0;
    double relpos_error = 0.0;
    double relposnh_error = 0.0;
    bool overlap_fallback = false;  // placed without a free tangent position

    [[nodiscard]] bool is_sentinel() const {
        return overlap_fallback || topology_error == kSentinelTopologyError;
    }
};

/// Output regions in input order.
struct Cartogram {
    std::vector<PlacedRegion> regions;
    bool feasible = false;

    [[nodiscard]] std::size_t size() const { return regions.size(); }
    [[nodiscard]] std::vector<Rect> rects() const {
        std::vector<Rect> out;
        out.reserve(regions.size());
        for (const auto& r : regions) {
            out.push_back(r.rect);
        }
        return out;
    }
    [[nodiscard]] std::size_t sentinel_count() const {
        std::size_t k = 0;
        for (const auto& r : regions) {
            k += r.is_sentinel() ? 1 : 0;
        }
        return k;
    }
};

}  // namespace rectcarto
