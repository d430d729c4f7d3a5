#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "doctest.h"
#include "rectcarto/geometry.hpp"
#include "rectcarto/random.hpp"
#include "rectcarto/spatial_index.hpp"

using namespace rectcarto;

namespace {

constexpr double kPi = std::numbers::pi;

Rect from_bounds(double x0, double x1, double y0, double y1) {
    return {(x0 + x1) / 2, (y0 + y1) / 2, (x1 - x0) / 2, (y1 - y0) / 2};
}

Rect random_rect(Rng& rng, double extent) {
    return {rng.uniform() * extent, rng.uniform() * extent, 0.05 + rng.uniform() * extent / 8,
            0.05 + rng.uniform() * extent / 8};
}

// Ray parameter to the grown boundary via the min of the two edge hits.
Point ring_oracle(const Rect& anchor, double dx, double dy, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double tx = c == 0.0 ? INFINITY : (anchor.dx + dx) / std::fabs(c);
    const double ty = s == 0.0 ? INFINITY : (anchor.dy + dy) / std::fabs(s);
    const double t = std::min(tx, ty);
    return {anchor.x + t * c, anchor.y + t * s};
}

}  // namespace

TEST_CASE("area is four times the half-extent product") {
    CHECK(area({0, 0, 3.209890, 2.704478}) == doctest::Approx(34.72430754968).epsilon(1e-12));
    CHECK(area({0, 0, 0.5, 0.5}) == 1.0);
    CHECK(area({0, 0, 1, 2}) == 8.0);
}

TEST_CASE("bearing") {
    CHECK(*bearing({0, 0}, {1, 0}) == 0.0);
    CHECK(*bearing({0, 0}, {0, 1}) == doctest::Approx(kPi / 2));
    CHECK(*bearing({0, 0}, {-1, 0}) == doctest::Approx(kPi));
    CHECK(*bearing({0, 0}, {-1, -0.0}) == kPi);  // never -pi
    CHECK_FALSE(bearing({2, 3}, {2, 3}).has_value());
    CHECK(bearing_or({2, 3}, {2, 3}, 0.25) == 0.25);

    SUBCASE("reversed vector is rotated by pi") {
        Rng rng(7);
        for (int i = 0; i < 500; ++i) {
            const Point p{rng.uniform() * 10 - 5, rng.uniform() * 10 - 5};
            const Point q{rng.uniform() * 10 - 5, rng.uniform() * 10 - 5};
            const double a = *bearing(p, q);
            const double b = *bearing(q, p);
            CHECK(a > -kPi);
            CHECK(a <= kPi);
            CHECK(angle_distance(b, normalize_angle(a + kPi)) < 1e-12);
        }
    }
}

TEST_CASE("angle helpers") {
    CHECK(normalize_angle(3 * kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(-kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(0.5) == 0.5);
    CHECK(angle_distance(kPi - 0.1, -kPi + 0.1) == doctest::Approx(0.2));
    CHECK(angle_distance(0.0, kPi / 2) == doctest::Approx(kPi / 2));
}

TEST_CASE("intersects closed versus open") {
    const Rect a = from_bounds(0, 1, 0, 1);
    const Rect b = from_bounds(1, 2, 0, 1);
    CHECK(intersects(a, b, Boundary::closed));
    CHECK_FALSE(intersects(a, b, Boundary::open));
    CHECK(intersects(from_bounds(0, 2, 0, 2), from_bounds(1, 3, 1, 3), Boundary::open));
    // corner touch
    CHECK(intersects(a, from_bounds(1, 2, 1, 2), Boundary::closed));
    CHECK_FALSE(intersects(a, from_bounds(1, 2, 1, 2), Boundary::open));
    // gap smaller than the slack
    const Rect c = from_bounds(1 + 1e-12, 2, 0, 1);
    CHECK_FALSE(intersects(a, c, Boundary::closed));
    CHECK(intersects(a, c, Boundary::closed, kTouchSlack));
}

TEST_CASE("placement ring examples") {
    const Rect anchor{0, 0, 1, 1};
    const Point east = placement_ring(anchor, 0.5, 0.5, 0.0);
    CHECK(east.x == 1.5);
    CHECK(east.y == 0.0);
    const Point diag = placement_ring(anchor, 0.5, 0.5, kPi / 4);
    CHECK(diag.x == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(diag.y == doctest::Approx(1.5).epsilon(1e-12));
    const Point north = placement_ring(anchor, 0.5, 0.5, kPi / 2);
    CHECK(north.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(north.y == 1.5);
    const Point west = placement_ring(anchor, 0.5, 0.5, kPi);
    CHECK(west.x == -1.5);
}

TEST_CASE("placement ring exact corner") {
    // tan(theta) == 1 exactly is not representable, so pin the corner branch
    // with extents whose ray hits the corner for theta = atan2(3, 4).
    const Rect anchor{10, -2, 3, 2};
    const double theta = std::atan2(3.0, 4.0);
    const Point c = placement_ring(anchor, 1, 1, theta);
    CHECK(c.x == doctest::Approx(14.0));
    CHECK(c.y == doctest::Approx(1.0));
}

TEST_CASE("placement ring properties") {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Rect anchor = random_rect(rng, 20);
        const double dx = 0.01 + rng.uniform() * 3;
        const double dy = 0.01 + rng.uniform() * 3;
        const double theta = normalize_angle((rng.uniform() * 2 - 1) * kPi);
        const Point c = placement_ring(anchor, dx, dy, theta);
        const Rect placed{c.x, c.y, dx, dy};

        CHECK_FALSE(intersects(anchor, placed, Boundary::open, kTouchSlack));
        CHECK(intersects(anchor, placed, Boundary::closed, kTouchSlack));

        const Point o = ring_oracle(anchor, dx, dy, theta);
        CHECK(c.x == doctest::Approx(o.x).epsilon(1e-9));
        CHECK(c.y == doctest::Approx(o.y).epsilon(1e-9));

        // on the ray from the anchor center
        const double along = std::atan2(c.y - anchor.y, c.x - anchor.x);
        CHECK(angle_distance(along, theta) < 1e-9);

        // reflecting theta reflects the point across the anchor's horizontal axis
        const Point m = placement_ring(anchor, dx, dy, -theta);
        CHECK(m.x == c.x);
        CHECK(m.y - anchor.y == doctest::Approx(anchor.y - c.y).epsilon(1e-12));
    }
}

TEST_CASE("spatial index basics") {
    SpatialIndex idx;
    const Rect probe{1, 1, 0.5, 0.5};
    CHECK(idx.query(probe).empty());
    CHECK_FALSE(idx.any_overlap(probe));
    idx.insert(7, probe);
    CHECK(idx.query(probe) == std::vector<std::size_t>{7});
    CHECK(idx.any_overlap(probe));
    // touching does not count
    CHECK(idx.query({2, 1, 0.5, 0.5}).empty());
    CHECK(parse_index_strategy("naive") == IndexStrategy::naive);
    CHECK_THROWS(parse_index_strategy("bogus"));
}

TEST_CASE("spatial index agrees with a linear scan") {
    Rng rng(2024);
    for (int config = 0; config < 1000; ++config) {
        const int count = 1 + static_cast<int>(rng.below(40));
        const double extent = 5 + rng.uniform() * 50;
        SpatialIndex indexed(IndexStrategy::indexed);
        SpatialIndex naive(IndexStrategy::naive);
        std::vector<Rect> stored;
        for (int k = 0; k < count; ++k) {
            const Rect r = random_rect(rng, extent);
            stored.push_back(r);
            indexed.insert(static_cast<std::size_t>(k), r);
            naive.insert(static_cast<std::size_t>(k), r);
        }
        const Rect probe = random_rect(rng, extent);
        std::vector<std::size_t> expected;
        for (std::size_t k = 0; k < stored.size(); ++k) {
            const Rect& s = stored[k];
            const bool overlap = probe.xmin() < s.xmax() && s.xmin() < probe.xmax() &&
                                 probe.ymin() < s.ymax() && s.ymin() < probe.ymax();
            if (overlap) {
                expected.push_back(k);
            }
        }
        REQUIRE(indexed.query(probe) == expected);
        REQUIRE(naive.query(probe) == expected);
        CHECK(indexed.intersection_calls() <= naive.intersection_calls());
        CHECK(indexed.any_overlap(probe) == !expected.empty());
    }
}
