#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "rectcarto/geometry.hpp"

namespace rectcarto {

enum class IndexStrategy {
    naive,    // test every stored rectangle
    indexed,  // prune by an ordered multiset keyed on the low x edge
};

[[nodiscard]] std::string_view to_string(IndexStrategy s);
[[nodiscard]] IndexStrategy parse_index_strategy(std::string_view s);

/// Overlap queries over a growing set of rectangles.
///
/// The indexed strategy keeps (xmin, id) pairs in an ordered multiset and
/// restricts exact tests to keys in [probe.xmin - max_width, probe.xmax],
/// where max_width is the widest rectangle inserted so far. Every exact
/// rectangle-pair test increments intersection_calls().
///
/// Single writer; concurrent const queries are not safe because of the
/// call counter.
class SpatialIndex {
public:
    explicit SpatialIndex(IndexStrategy strategy = IndexStrategy::indexed)
        : strategy_(strategy) {}

    void insert(std::size_t id, const Rect& rect);

    /// Ids of stored rectangles whose interiors overlap `probe` (open mode,
    /// shrunk by `slack`), in ascending id order.
    [[nodiscard]] std::vector<std::size_t> query(const Rect& probe, double slack = 0.0) const;

    /// True if any stored rectangle overlaps `probe`. The naive strategy scans
    /// the full set; the indexed one stops at the first hit.
    [[nodiscard]] bool any_overlap(const Rect& probe, double slack = 0.0) const;

    [[nodiscard]] std::size_t size() const { return items_.size(); }
    [[nodiscard]] bool empty() const { return items_.empty(); }
    [[nodiscard]] IndexStrategy strategy() const { return strategy_; }
    [[nodiscard]] std::uint64_t intersection_calls() const { return calls_; }
    void reset_counter() { calls_ = 0; }

private:
    struct Item {
        std::size_t id;
        Rect rect;
    };

    template <typename Visit>
    void for_each_candidate(const Rect& probe, double slack, Visit&& visit) const;

    IndexStrategy strategy_;
    std::vector<Item> items_;
    std::multimap<double, std::size_t> by_xmin_;  // key -> position in items_
    double max_width_ = 0.0;
    mutable std::uint64_t calls_ = 0;
};

}  // namespace rectcarto
