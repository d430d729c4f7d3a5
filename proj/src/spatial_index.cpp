#include "rectcarto/spatial_index.hpp"

#include <algorithm>
#include <string>

#include "rectcarto/error.hpp"

namespace rectcarto {

std::string_view to_string(IndexStrategy s) {
    return s == IndexStrategy::naive ? "naive" : "indexed";
}

IndexStrategy parse_index_strategy(std::string_view s) {
    if (s == "naive") {
        return IndexStrategy::naive;
    }
    if (s == "indexed") {
        return IndexStrategy::indexed;
    }
    throw ValidationError("unknown index strategy '" + std::string(s) + "'");
}

void SpatialIndex::insert(std::size_t id, const Rect& rect) {
    by_xmin_.emplace(rect.xmin(), items_.size());
    items_.push_back({id, rect});
    max_width_ = std::max(max_width_, 2.0 * rect.dx);
}

// Visit returns true to stop early.
template <typename Visit>
void SpatialIndex::for_each_candidate(const Rect& probe, double slack, Visit&& visit) const {
    if (strategy_ == IndexStrategy::naive) {
        for (const Item& item : items_) {
            if (visit(item)) {
                return;
            }
        }
        return;
    }
    const double pad = kTouchSlack + std::max(slack, 0.0);
    const double lo = probe.xmin() - max_width_ - pad;
    const double hi = probe.xmax() + pad;
    const auto end = by_xmin_.upper_bound(hi);
    for (auto it = by_xmin_.lower_bound(lo); it != end; ++it) {
        if (visit(items_[it->second])) {
            return;
        }
    }
}

std::vector<std::size_t> SpatialIndex::query(const Rect& probe, double slack) const {
    std::vector<std::size_t> hits;
    for_each_candidate(probe, slack, [&](const Item& item) {
        ++calls_;
        if (intersects(probe, item.rect, Boundary::open, slack)) {
            hits.push_back(item.id);
        }
        return false;
    });
    std::sort(hits.begin(), hits.end());
    return hits;
}

bool SpatialIndex::any_overlap(const Rect& probe, double slack) const {
    bool found = false;
    const bool stop_early = strategy_ == IndexStrategy::indexed;
    for_each_candidate(probe, slack, [&](const Item& item) {
        ++calls_;
        if (intersects(probe, item.rect, Boundary::open, slack)) {
            found = true;
            return stop_early;
        }
        return false;
    });
    return found;
}

}  // namespace rectcarto
