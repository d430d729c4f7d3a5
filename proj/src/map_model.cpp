#include "rectcarto/map_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "rectcarto/error.hpp"

namespace rectcarto {

InputMap::InputMap(std::vector<InputRegion> regions) : regions_(std::move(regions)) {
    if (regions_.empty()) {
        throw ValidationError("map has no regions");
    }
    std::unordered_set<std::string> names;
    for (std::size_t i = 0; i < regions_.size(); ++i) {
        InputRegion& r = regions_[i];
        const std::string where = "region " + std::to_string(i + 1);
        if (!std::isfinite(r.x) || !std::isfinite(r.y)) {
            throw ValidationError(where + ": center coordinates must be finite");
        }
        if (!(r.dx > 0.0) || !(r.dy > 0.0) || !std::isfinite(r.dx) || !std::isfinite(r.dy)) {
            throw ValidationError(where + ": dx and dy must be positive and finite");
        }
        if (!(r.z > 0.0) || !std::isfinite(r.z)) {
            throw ValidationError(where + ": z must be positive and finite");
        }
        if (r.name.empty()) {
            r.name = "region_" + std::to_string(i + 1);
        }
        if (!names.insert(r.name).second) {
            throw ValidationError(where + ": duplicate name '" + r.name + "'");
        }
    }
}

std::vector<Rect> InputMap::rects() const {
    std::vector<Rect> out;
    out.reserve(regions_.size());
    for (const auto& r : regions_) {
        out.push_back(r.rect());
    }
    return out;
}

bool PseudoDualGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i >= n || j >= n) {
        return false;
    }
    const auto& adj = adjacency[i];
    return std::binary_search(adj.begin(), adj.end(), j);
}

std::vector<std::vector<std::size_t>> PseudoDualGraph::components() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        auto& comp = out.emplace_back();
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w : adjacency[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

PseudoDualGraph touching_graph(std::span<const Rect> rects, double slack) {
    PseudoDualGraph g;
    g.n = rects.size();
    g.adjacency.resize(g.n);

    // Sweep over xmin so only x-overlapping pairs are tested.
    std::vector<std::size_t> order(g.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rects[a].xmin() < rects[b].xmin();
    });
    for (std::size_t a = 0; a < g.n; ++a) {
        const Rect& ra = rects[order[a]];
        for (std::size_t b = a + 1; b < g.n; ++b) {
            const Rect& rb = rects[order[b]];
            if (rb.xmin() > ra.xmax() + slack) {
                break;
            }
            if (intersects(ra, rb, Boundary::closed, slack)) {
                const auto [i, j] = std::minmax(order[a], order[b]);
                g.edges.emplace_back(i, j);
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (const auto& [i, j] : g.edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    for (auto& adj : g.adjacency) {
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

PseudoDualGraph build_dual_graph(const InputMap& map) {
    const auto rects = map.rects();
    PseudoDualGraph g = touching_graph(rects, 0.0);
    const auto comps = g.components();
    if (comps.size() > 1) {
        std::ostringstream msg;
        msg << "dual graph is not connected (" << comps.size() << " components):";
        for (std::size_t c = 0; c < comps.size(); ++c) {
            msg << (c == 0 ? " " : "; ") << "{";
            const std::size_t shown = std::min<std::size_t>(comps[c].size(), 8);
            for (std::size_t k = 0; k < shown; ++k) {
                msg << (k ? ", " : "") << map[comps[c][k]].name;
            }
            if (comps[c].size() > shown) {
                msg << ", ... +" << comps[c].size() - shown;
            }
            msg << "}";
        }
        throw ConnectivityError(msg.str());
    }
    return g;
}

std::vector<double> desired_areas(const InputMap& map) {
    double total_area = 0.0;
    double total_z = 0.0;
    for (const auto& r : map) {
        total_area += area(r.rect());
        total_z += r.z;
    }
    std::vector<double> out;
    out.reserve(map.size());
    for (const auto& r : map) {
        out.push_back(r.z * total_area / total_z);
    }
    return out;
}

InputMap checkerboard(std::size_t n) {
    if (n < 2) {
        throw ValidationError("checkerboard size must be at least 2");
    }
    std::vector<InputRegion> cells;
    cells.reserve(n * n);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= n; ++i) {
            const double z = (i + j) % 2 == 0 ? 4.0 : 1.0;
            cells.push_back({static_cast<double>(i), static_cast<double>(j), 0.5, 0.5, z,
                             std::to_string(i) + "_" + std::to_string(j)});
        }
    }
    return InputMap(std::move(cells));
}

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
    std::vector<bool> seen(order_.size(), false);
    for (std::size_t v : order_) {
        if (v >= order_.size() || seen[v]) {
            throw ValidationError("index order is not a permutation of 1.." +
                                  std::to_string(order_.size()));
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
}

Permutation Permutation::reversed(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.rbegin(), v.rend(), std::size_t{0});
    return Permutation(std::move(v));
}

Permutation Permutation::random(std::size_t n, Rng& rng) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(v));
    Permutation p;
    p.order_ = std::move(v);
    return p;
}

std::vector<std::size_t> Permutation::ranks() const {
    std::vector<std::size_t> r(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
        r[order_[k]] = k;
    }
    return r;
}

}  // namespace rectcarto
