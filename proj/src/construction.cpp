#include "rectcarto/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rectcarto/error.hpp"
#include "rectcarto/metrics.hpp"

namespace rectcarto {

namespace {

constexpr double kStep = std::numbers::pi / 180.0;

}  // namespace

std::pair<double, double> scaled_extents(const InputRegion& input, double desired_area) {
    const double dx = std::sqrt(desired_area * input.dx / (4.0 * input.dy));
    const double dy = dx * input.dy / input.dx;
    return {dx, dy};
}

CartogramBuilder::CartogramBuilder(InputMap map)
    : map_(std::move(map)), graph_(build_dual_graph(map_)), desired_(rectcarto::desired_areas(map_)) {
    extents_.reserve(map_.size());
    centers_.reserve(map_.size());
    for (std::size_t j = 0; j < map_.size(); ++j) {
        extents_.push_back(scaled_extents(map_[j], desired_[j]));
        centers_.push_back(map_[j].center());
    }
}

Cartogram CartogramBuilder::build(const Permutation& order, IndexStrategy strategy,
                                  ConstructStats* stats) const {
    const std::size_t n = map_.size();
    if (order.size() != n) {
        throw ValidationError("index order has " + std::to_string(order.size()) +
                              " entries for a map of " + std::to_string(n) + " regions");
    }
    const std::vector<std::size_t> rank = order.ranks();
    auto by_rank = [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; };

    Cartogram cart;
    cart.regions.resize(n);
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> parent(n, n);
    SpatialIndex index(strategy);
    std::size_t next_dfs = 1;

    const bool tracing = stats != nullptr && stats->record_trace;
    if (stats != nullptr) {
        stats->trace.clear();
    }
    auto commit = [&](std::size_t v, Point c, bool fallback, std::size_t anchor, int k) {
        if (tracing) {
            stats->trace.push_back({v, parent[v] == n ? v : parent[v], anchor, k, fallback});
        }
        const auto [ex, ey] = extents_[v];
        PlacedRegion& out = cart.regions[v];
        out.rect = {c.x, c.y, ex, ey};
        out.name = map_[v].name;
        out.z = map_[v].z;
        out.dfs_num = next_dfs++;
        out.overlap_fallback = fallback;
        placed[v] = true;
        index.insert(v, out.rect);
    };

    // Sweep around one anchor; true on success.
    auto sweep = [&](std::size_t v, std::size_t anchor, Point& hit, int& hit_index) {
        const auto [ex, ey] = extents_[v];
        const Rect& base = cart.regions[anchor].rect;
        const double alpha = bearing_or(centers_[anchor], centers_[v], 0.0);
        for (int k = 0; k < kSweepPositions; ++k) {
            const double theta = normalize_angle(alpha + sweep_offset_degrees(k) * kStep);
            const Point c = placement_ring(base, ex, ey, theta);
            if (!index.any_overlap({c.x, c.y, ex, ey}, kTouchSlack)) {
                hit = c;
                hit_index = k;
                return true;
            }
        }
        return false;
    };

    auto place = [&](std::size_t v) {
        const std::size_t p = parent[v];
        Point hit;
        int k = -1;
        if (sweep(v, p, hit, k)) {
            commit(v, hit, false, p, k);
            return;
        }
        std::vector<std::size_t> anchors;
        for (std::size_t w : graph_.adjacency[v]) {
            if (placed[w] && w != p) {
                anchors.push_back(w);
            }
        }
        std::sort(anchors.begin(), anchors.end(), by_rank);
        for (std::size_t a : anchors) {
            if (sweep(v, a, hit, k)) {
                commit(v, hit, false, a, k);
                return;
            }
        }
        const auto [ex, ey] = extents_[v];
        const double alpha = bearing_or(centers_[p], centers_[v], 0.0);
        commit(v, placement_ring(cart.regions[p].rect, ex, ey, alpha), true, p, -1);
    };

    std::vector<std::size_t> stack;
    std::vector<std::size_t> neighbours;
    stack.push_back(order[0]);
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (placed[v]) {
            continue;
        }
        if (parent[v] == n) {
            commit(v, centers_[v], false, v, -1);
        } else {
            place(v);
        }
        neighbours.clear();
        for (std::size_t w : graph_.adjacency[v]) {
            if (!placed[w]) {
                neighbours.push_back(w);
            }
        }
        std::sort(neighbours.begin(), neighbours.end(), by_rank);
        for (std::size_t w : neighbours) {
            parent[w] = v;
            stack.push_back(w);
        }
    }

    const PseudoDualGraph out_graph = output_graph(cart);
    std::vector<Point> out_centers(n);
    for (std::size_t j = 0; j < n; ++j) {
        out_centers[j] = cart.regions[j].rect.center();
    }
    const RegionErrors err = per_region_errors(centers_, out_centers, graph_, out_graph);
    std::size_t sentinels = 0;
    for (std::size_t j = 0; j < n; ++j) {
        PlacedRegion& r = cart.regions[j];
        r.topology_error = r.overlap_fallback ? kSentinelTopologyError : err.topology[j];
        r.relpos_error = err.relpos[j];
        r.relposnh_error = err.relposnh[j];
        sentinels += r.overlap_fallback ? 1 : 0;
    }
    cart.feasible = sentinels == 0;

    if (stats != nullptr) {
        stats->intersection_calls = index.intersection_calls();
        stats->sentinel_regions = sentinels;
    }
    return cart;
}

Cartogram construct(const InputMap& map, const Permutation& order, IndexStrategy strategy) {
    return CartogramBuilder(map).build(order, strategy);
}

}  // namespace rectcarto
