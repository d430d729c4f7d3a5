#pragma once

// Independent helpers shared by the test suites. Nothing here calls into the
// library's geometry routines, so they can serve as oracles.

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "rectcarto/geometry.hpp"
#include "rectcarto/map_model.hpp"
#include "rectcarto/random.hpp"

namespace rectcarto::testing {

inline constexpr double kEps = 1e-9;

inline bool interiors_overlap(const Rect& a, const Rect& b, double eps = kEps) {
    return a.xmin() < b.xmax() - eps && b.xmin() < a.xmax() - eps && a.ymin() < b.ymax() - eps &&
           b.ymin() < a.ymax() - eps;
}

inline bool boxes_touch(const Rect& a, const Rect& b, double eps = kEps) {
    return a.xmin() <= b.xmax() + eps && b.xmin() <= a.xmax() + eps &&
           a.ymin() <= b.ymax() + eps && b.ymin() <= a.ymax() + eps;
}

inline bool overlaps_any(const Rect& probe, const std::vector<Rect>& others) {
    for (const Rect& o : others) {
        if (interiors_overlap(probe, o)) {
            return true;
        }
    }
    return false;
}

/// First overlapping pair by all-pairs scan.
inline std::optional<std::pair<std::size_t, std::size_t>> first_overlap(
    const std::vector<Rect>& rects) {
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            if (interiors_overlap(rects[i], rects[j])) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

/// Connectivity of the closed-touch graph by flood fill over all pairs.
inline bool touching_connected(const std::vector<Rect>& rects) {
    if (rects.empty()) {
        return true;
    }
    std::vector<bool> seen(rects.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < rects.size(); ++w) {
            if (!seen[w] && boxes_touch(rects[v], rects[w])) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == rects.size();
}

/// Tangent position via t = min(W/|cos|, H/|sin|) along the ray.
inline Point ring_oracle(const Rect& anchor, double dx, double dy, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double tx = c == 0.0 ? INFINITY : (anchor.dx + dx) / std::fabs(c);
    const double ty = s == 0.0 ? INFINITY : (anchor.dy + dy) / std::fabs(s);
    const double t = std::min(tx, ty);
    return {anchor.x + t * c, anchor.y + t * s};
}

/// Random map whose closed boxes form a connected graph: each new region
/// overlaps a randomly chosen earlier one.
inline InputMap random_connected_map(Rng& rng, std::size_t n, double spread = 1.0) {
    std::vector<InputRegion> regions;
    regions.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = 0.3 + rng.uniform() * spread;
        const double dy = 0.3 + rng.uniform() * spread;
        double x = 0.0;
        double y = 0.0;
        if (k > 0) {
            const InputRegion& base = regions[rng.below(k)];
            x = base.x + (rng.uniform() * 2 - 1) * (base.dx + dx) * 0.95;
            y = base.y + (rng.uniform() * 2 - 1) * (base.dy + dy) * 0.95;
        }
        regions.push_back({x, y, dx, dy, 0.2 + rng.uniform() * 4, ""});
    }
    return InputMap(std::move(regions));
}

}  // namespace rectcarto::testing
