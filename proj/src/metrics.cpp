#include "rectcarto/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rectcarto/error.hpp"

namespace rectcarto {

namespace {

void require_same_size(const InputMap& input, const Cartogram& cart) {
    if (input.size() != cart.size()) {
        throw ValidationError("map has " + std::to_string(input.size()) +
                              " regions but cartogram has " + std::to_string(cart.size()));
    }
}

std::vector<Point> centers_of(const InputMap& input) {
    std::vector<Point> out;
    out.reserve(input.size());
    for (const auto& r : input) {
        out.push_back(r.center());
    }
    return out;
}

std::vector<Point> centers_of(const Cartogram& cart) {
    std::vector<Point> out;
    out.reserve(cart.size());
    for (const auto& r : cart.regions) {
        out.push_back(r.rect.center());
    }
    return out;
}

// Coincident centers get bearing 0.
double pair_deviation(Point in_i, Point in_j, Point out_i, Point out_j) {
    return angle_distance(bearing_or(in_i, in_j, 0.0), bearing_or(out_i, out_j, 0.0));
}

}  // namespace

double d_A(const InputMap& input, const Cartogram& cart) {
    require_same_size(input, cart);
    const auto desired = desired_areas(input);
    double sum = 0.0;
    for (std::size_t j = 0; j < cart.size(); ++j) {
        sum += std::fabs(area(cart.regions[j].rect) - desired[j]);
    }
    return sum;
}

double d_S(const InputMap& input, const Cartogram& cart) {
    require_same_size(input, cart);
    double sum = 0.0;
    for (std::size_t j = 0; j < cart.size(); ++j) {
        const Rect& out = cart.regions[j].rect;
        sum += std::fabs(input[j].dy / input[j].dx - out.dy / out.dx);
    }
    return sum;
}

double d_T(const PseudoDualGraph& input_graph, const PseudoDualGraph& output_graph) {
    const auto& a = input_graph.edges;
    const auto& b = output_graph.edges;
    std::size_t common = 0;
    // both edge lists are sorted
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++common;
            ++ia;
            ++ib;
        }
    }
    const std::size_t uni = a.size() + b.size() - common;
    if (uni == 0) {
        return 0.0;
    }
    return static_cast<double>(uni - common) / static_cast<double>(uni);
}

double d_T(const InputMap& input, const Cartogram& cart) {
    require_same_size(input, cart);
    return d_T(touching_graph(input.rects(), 0.0), output_graph(cart));
}

double d_R(std::span<const Point> input_centers, std::span<const Point> output_centers) {
    const std::size_t n = input_centers.size();
    if (n != output_centers.size()) {
        throw ValidationError("center lists differ in length");
    }
    if (n < 2) {
        throw ValidationError("relative position error needs at least 2 regions");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += pair_deviation(input_centers[i], input_centers[j], output_centers[i],
                                  output_centers[j]);
        }
    }
    return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double d_R(const InputMap& input, const Cartogram& cart) {
    require_same_size(input, cart);
    const auto in = centers_of(input);
    const auto out = centers_of(cart);
    return d_R(in, out);
}

PseudoDualGraph output_graph(const Cartogram& cart) {
    const auto rects = cart.rects();
    return touching_graph(rects, kTouchSlack);
}

RegionErrors per_region_errors(std::span<const Point> input_centers,
                               std::span<const Point> output_centers,
                               const PseudoDualGraph& input_graph,
                               const PseudoDualGraph& output_graph) {
    const std::size_t n = input_centers.size();
    RegionErrors err;
    err.topology.assign(n, 0);
    err.relpos.assign(n, 0.0);
    err.relposnh.assign(n, 0.0);

    for (std::size_t j = 0; j < n; ++j) {
        const auto& a = input_graph.adjacency[j];
        const auto& b = output_graph.adjacency[j];
        std::size_t common = 0;
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                ++common;
                ++ia;
                ++ib;
            }
        }
        err.topology[j] = static_cast<int>(a.size() + b.size() - 2 * common);
    }

    if (n < 2) {
        return err;
    }
    // Deviation is symmetric in (i, j), so accumulate each pair once.
    std::vector<double> sums(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dev = pair_deviation(input_centers[i], input_centers[j],
                                              output_centers[i], output_centers[j]);
            sums[i] += dev;
            sums[j] += dev;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        err.relpos[j] = sums[j] / static_cast<double>(n - 1);
        const auto& nh = input_graph.adjacency[j];
        if (!nh.empty()) {
            double s = 0.0;
            for (std::size_t i : nh) {
                s += pair_deviation(input_centers[j], input_centers[i], output_centers[j],
                                    output_centers[i]);
            }
            err.relposnh[j] = s / static_cast<double>(nh.size());
        }
    }
    return err;
}

double area_error(std::span<const double> areas, std::span<const double> desired,
                  std::span<const double> z) {
    double z_total = 0.0;
    for (double v : z) {
        z_total += v;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < areas.size(); ++j) {
        sum += z[j] / z_total * std::fabs(areas[j] - desired[j]) / (areas[j] + desired[j]);
    }
    return sum;
}

BoundingBox bounding_box(std::span<const Rect> rects) {
    if (rects.empty()) {
        return {};
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    BoundingBox box{inf, -inf, inf, -inf};
    for (const Rect& r : rects) {
        box.xmin = std::min(box.xmin, r.xmin());
        box.xmax = std::max(box.xmax, r.xmax());
        box.ymin = std::min(box.ymin, r.ymin());
        box.ymax = std::max(box.ymax, r.ymax());
    }
    return box;
}

double screen_filling_pct(std::span<const Rect> rects) {
    const BoundingBox box = bounding_box(rects);
    const double box_area = (box.xmax - box.xmin) * (box.ymax - box.ymin);
    if (!(box_area > 0.0)) {
        return 0.0;
    }
    double covered = 0.0;
    for (const Rect& r : rects) {
        covered += area(r);
    }
    return 100.0 * covered / box_area;
}

SummaryStats summarize(const InputMap& input, const Cartogram& cart) {
    require_same_size(input, cart);
    const std::size_t n = input.size();
    const auto rects = cart.rects();
    const auto desired = desired_areas(input);
    std::vector<double> areas(n);
    std::vector<double> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        areas[j] = area(rects[j]);
        z[j] = input[j].z;
    }

    SummaryStats s;
    s.n_regions = n;
    s.area_error = area_error(areas, desired, z);

    const auto in_graph = touching_graph(input.rects(), 0.0);
    const auto out_graph = touching_graph(rects, kTouchSlack);
    const auto in_c = centers_of(input);
    const auto out_c = centers_of(cart);
    const RegionErrors err = per_region_errors(in_c, out_c, in_graph, out_graph);
    std::size_t topo = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (cart.regions[j].is_sentinel()) {
            ++s.sentinel_regions;
        } else {
            topo += static_cast<std::size_t>(err.topology[j]);
        }
    }
    s.topology_error = topo;
    if (n >= 2) {
        s.relative_position_error = d_R(in_c, out_c);
    }
    s.screen_filling_pct = screen_filling_pct(rects);
    s.bbox = bounding_box(rects);
    return s;
}

SummaryStats summarize(const InputMap& input) {
    const std::size_t n = input.size();
    const auto rects = input.rects();
    const auto desired = desired_areas(input);
    std::vector<double> areas(n);
    std::vector<double> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        areas[j] = area(rects[j]);
        z[j] = input[j].z;
    }
    SummaryStats s;
    s.n_regions = n;
    s.area_error = area_error(areas, desired, z);
    s.screen_filling_pct = screen_filling_pct(rects);
    s.bbox = bounding_box(rects);
    return s;
}

}  // namespace rectcarto
