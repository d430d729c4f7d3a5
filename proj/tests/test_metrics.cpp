#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "doctest.h"
#include "rectcarto/construction.hpp"
#include "rectcarto/error.hpp"
#include "rectcarto/io.hpp"
#include "rectcarto/metrics.hpp"
#include "test_support.hpp"

using namespace rectcarto;
using namespace rectcarto::testing;

namespace {

Cartogram cartogram_of(const std::vector<Rect>& rects) {
    Cartogram cart;
    for (std::size_t k = 0; k < rects.size(); ++k) {
        PlacedRegion r;
        r.rect = rects[k];
        r.name = "r" + std::to_string(k);
        r.z = 1.0;
        r.dfs_num = k + 1;
        cart.regions.push_back(r);
    }
    cart.feasible = true;
    return cart;
}

InputMap map_of(const std::vector<Rect>& rects, const std::vector<double>& z) {
    std::vector<InputRegion> regions;
    for (std::size_t k = 0; k < rects.size(); ++k) {
        regions.push_back({rects[k].x, rects[k].y, rects[k].dx, rects[k].dy, z[k], ""});
    }
    return InputMap(std::move(regions));
}

PseudoDualGraph graph_of(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    PseudoDualGraph g;
    g.n = n;
    g.adjacency.assign(n, {});
    for (auto [a, b] : edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    for (auto& nb : g.adjacency) {
        std::sort(nb.begin(), nb.end());
    }
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    return g;
}

using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

EdgeSet touching_pairs(const std::vector<Rect>& rects, double eps) {
    EdgeSet out;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            if (boxes_touch(rects[i], rects[j], eps)) {
                out.insert({i, j});
            }
        }
    }
    return out;
}

double wrapped(double a, double b) { return std::fabs(std::remainder(a - b, 2 * std::numbers::pi)); }

double brute_d_R(const std::vector<Point>& p, const std::vector<Point>& q) {
    double sum = 0.0;
    int pairs = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            sum += wrapped(std::atan2(p[j].y - p[i].y, p[j].x - p[i].x),
                           std::atan2(q[j].y - q[i].y, q[j].x - q[i].x));
            ++pairs;
        }
    }
    return sum / pairs;
}

std::vector<Point> centers(const std::vector<Rect>& rects) {
    std::vector<Point> out;
    for (const Rect& r : rects) {
        out.push_back(r.center());
    }
    return out;
}

}  // namespace

TEST_CASE("d_A and d_S") {
    // unit squares in, desired areas 0.4 and 1.6 from z = 1, 4
    const InputMap in = map_of({{0, 0, 0.5, 0.5}, {1, 0, 0.5, 0.5}}, {1, 4});
    const Cartogram same = cartogram_of({{0, 0, 0.5, 0.5}, {1, 0, 0.5, 0.5}});
    CHECK(d_A(in, same) == doctest::Approx(1.2));
    CHECK(d_S(in, same) == doctest::Approx(0.0));

    const InputMap one = map_of({{0, 0, 1, 1}}, {1});
    CHECK(d_S(one, cartogram_of({{0, 0, 1, 2}})) == doctest::Approx(1.0));
    CHECK(d_A(one, cartogram_of({{0, 0, 1, 1}})) == doctest::Approx(0.0));

    CHECK_THROWS_AS((void)d_A(in, cartogram_of({{0, 0, 1, 1}})), ValidationError);
    CHECK_THROWS_AS((void)d_S(in, cartogram_of({{0, 0, 1, 1}})), ValidationError);
}

TEST_CASE("d_T examples") {
    const auto e = graph_of(3, {{0, 1}, {1, 2}});
    CHECK(d_T(e, e) == 0.0);
    CHECK(d_T(e, graph_of(3, {{0, 1}})) == doctest::Approx(0.5));
    CHECK(d_T(graph_of(5, {{0, 1}, {1, 2}}), graph_of(5, {{2, 3}, {3, 4}, {0, 4}})) == 1.0);
    CHECK(d_T(graph_of(3, {}), graph_of(3, {})) == 0.0);
}

TEST_CASE("d_R examples") {
    const std::vector<Point> in{{0, 0}, {1, 0}};
    const std::vector<Point> out{{0, 0}, {0, 1}};
    CHECK(d_R(in, in) == 0.0);
    CHECK(d_R(in, out) == doctest::Approx(std::numbers::pi / 2));
    const std::vector<Point> flipped{{1, 0}, {0, 0}};
    CHECK(d_R(in, flipped) == doctest::Approx(std::numbers::pi));
    const std::vector<Point> single{{0, 0}};
    CHECK_THROWS_AS((void)d_R(single, single), ValidationError);
}

TEST_CASE("d_R is similarity invariant and bounded") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.below(12);
        std::vector<Point> in;
        std::vector<Point> out;
        for (std::size_t k = 0; k < n; ++k) {
            in.push_back({rng.uniform() * 10, rng.uniform() * 10});
            out.push_back({rng.uniform() * 10, rng.uniform() * 10});
        }
        const double base = d_R(in, out);
        CHECK(base >= 0.0);
        CHECK(base <= std::numbers::pi);
        const double s = 0.1 + rng.uniform() * 20;
        const double tx = rng.uniform() * 100 - 50;
        const double ty = rng.uniform() * 100 - 50;
        std::vector<Point> moved;
        for (const Point& p : out) {
            moved.push_back({p.x * s + tx, p.y * s + ty});
        }
        CHECK(d_R(in, moved) == doctest::Approx(base).epsilon(1e-9));
        CHECK(d_R(in, in) == 0.0);
    }
}

TEST_CASE("d_T, d_R and the topology sum match brute force on small maps") {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.below(5);
        const InputMap map = random_connected_map(rng, n);
        const Cartogram cart = construct(map, Permutation::random(n, rng));
        const auto in_rects = map.rects();
        const auto out_rects = cart.rects();

        const EdgeSet e = touching_pairs(in_rects, 0.0);
        const EdgeSet ebar = touching_pairs(out_rects, kTouchSlack);
        EdgeSet uni = e;
        uni.insert(ebar.begin(), ebar.end());
        std::size_t common = 0;
        for (const auto& p : e) {
            common += ebar.count(p);
        }
        const double expect_t =
            uni.empty() ? 0.0 : static_cast<double>(uni.size() - common) / uni.size();
        CHECK(d_T(map, cart) == expect_t);

        CHECK(std::fabs(d_R(map, cart) - brute_d_R(centers(in_rects), centers(out_rects))) <=
              1e-12);

        std::size_t topo = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (cart.regions[j].is_sentinel()) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j) {
                    continue;
                }
                const auto key = std::minmax(i, j);
                const bool a = e.count({key.first, key.second}) > 0;
                const bool b = ebar.count({key.first, key.second}) > 0;
                topo += a != b ? 1 : 0;
            }
        }
        const SummaryStats s = summarize(map, cart);
        REQUIRE(s.topology_error.has_value());
        CHECK(*s.topology_error == topo);
        CHECK(s.sentinel_regions == cart.sentinel_count());
    }
}

TEST_CASE("per-region errors") {
    const std::vector<Rect> rects{{0, 0, 1, 1}, {2, 0, 1, 1}, {1, 2, 1, 1}, {9, 9, 1, 1}};
    const auto c = centers(rects);
    const auto g = touching_graph(rects, 0.0);
    const RegionErrors same = per_region_errors(c, c, g, g);
    for (std::size_t j = 0; j < rects.size(); ++j) {
        CHECK(same.topology[j] == 0);
        CHECK(same.relpos[j] == 0.0);
        CHECK(same.relposnh[j] == 0.0);
    }

    // swap the two bottom cells: region 3 has no neighbours at all
    std::vector<Point> moved = c;
    std::swap(moved[0], moved[1]);
    const auto empty = graph_of(4, {});
    const RegionErrors err = per_region_errors(c, moved, g, empty);
    CHECK(err.relposnh[3] == 0.0);
    CHECK(err.topology[0] == static_cast<int>(g.adjacency[0].size()));
    CHECK(err.relpos[0] > 0.0);
    // region 0 against 1: bearing 0 vs pi; against 2: atan2(2,1) vs atan2(2,-1); 3 unchanged-ish
    const double expect0 = (std::numbers::pi + wrapped(std::atan2(2, 1), std::atan2(2, -1)) +
                            wrapped(std::atan2(9, 9), std::atan2(9, 7))) /
                           3.0;
    CHECK(err.relpos[0] == doctest::Approx(expect0));
}

TEST_CASE("area error") {
    const std::vector<double> a{1.0, 1.0};
    const std::vector<double> d{1.0, 3.0};
    const std::vector<double> z{1.0, 3.0};
    // weights 1/4, 3/4; terms 0 and 2/4
    CHECK(area_error(a, d, z) == doctest::Approx(0.375));
    CHECK(area_error(a, a, z) == 0.0);
}

TEST_CASE("summaries of the bundled maps") {
    const InputMap board = checkerboard(8);
    const SummaryStats self = summarize(board);
    CHECK(self.n_regions == 64);
    CHECK(self.area_error == doctest::Approx(0.27).epsilon(0.01));
    CHECK_FALSE(self.topology_error.has_value());
    CHECK_FALSE(self.relative_position_error.has_value());
    CHECK(self.bbox.xmin == 0.5);
    CHECK(self.bbox.xmax == 8.5);
    CHECK(self.screen_filling_pct == doctest::Approx(100.0));

    const InputMap us = read_map(std::string(RECTCARTO_DATA_DIR) + "/us_states.csv");
    CHECK(summarize(us).area_error == doctest::Approx(0.17).epsilon(0.03));
    const Cartogram cart = construct(us, Permutation::identity(us.size()));
    const SummaryStats s = summarize(us, cart);
    CHECK(s.n_regions == 50);
    CHECK(s.area_error < 5e-7);
    CHECK(*s.topology_error > 0);
    CHECK(*s.relative_position_error > 0.0);
    CHECK(*s.relative_position_error < 1.0);
    CHECK(s.screen_filling_pct > 0.0);
    CHECK(s.screen_filling_pct <= 100.0);

    // identity geometry with z proportional to area
    std::vector<InputRegion> regions;
    for (const auto& r : us) {
        InputRegion copy = r;
        copy.z = 4 * r.dx * r.dy;
        regions.push_back(copy);
    }
    const InputMap prop(std::move(regions));
    Cartogram ident;
    for (const auto& r : prop) {
        ident.regions.push_back({r.rect(), r.name, r.z, 1, 0, 0.0, 0.0, false});
    }
    const SummaryStats z = summarize(prop, ident);
    CHECK(z.area_error == doctest::Approx(0.0));
    CHECK(*z.topology_error == 0);
    CHECK(*z.relative_position_error == 0.0);
    CHECK(z.screen_filling_pct == doctest::Approx(summarize(prop).screen_filling_pct));
}

TEST_CASE("sentinels are excluded from the topology sum") {
    const InputMap map = map_of({{0, 0, 1, 1}, {2, 0, 1, 1}, {4, 0, 1, 1}}, {1, 1, 1});
    Cartogram cart = cartogram_of({{0, 0, 1, 1}, {2, 0, 1, 1}, {20, 0, 1, 1}});
    const std::size_t plain = *summarize(map, cart).topology_error;
    CHECK(plain == 2);
    cart.regions[2].overlap_fallback = true;
    cart.regions[2].topology_error = kSentinelTopologyError;
    cart.feasible = false;
    const SummaryStats s = summarize(map, cart);
    CHECK(*s.topology_error == 1);
    CHECK(s.sentinel_regions == 1);
}
