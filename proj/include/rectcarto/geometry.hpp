#pragma once

#include <cmath>
#include <numbers>
#include <optional>

namespace rectcarto {

/// Absolute slack (map units) used to absorb floating-point tangency.
inline constexpr double kTouchSlack = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned rectangle stored as center plus strictly positive half-extents.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double dx = 0.0;
    double dy = 0.0;

    [[nodiscard]] Point center() const { return {x, y}; }
    [[nodiscard]] double xmin() const { return x - dx; }
    [[nodiscard]] double xmax() const { return x + dx; }
    [[nodiscard]] double ymin() const { return y - dy; }
    [[nodiscard]] double ymax() const { return y + dy; }
    [[nodiscard]] bool valid() const {
        return std::isfinite(x) && std::isfinite(y) && dx > 0.0 && dy > 0.0 &&
               std::isfinite(dx) && std::isfinite(dy);
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Boundary {
    closed,  // touching counts
    open,    // interiors must overlap
};

[[nodiscard]] inline double area(const Rect& r) { return 4.0 * r.dx * r.dy; }

/// Wraps any angle into (-pi, pi].
[[nodiscard]] double normalize_angle(double theta);

/// Absolute angular difference folded into [0, pi].
[[nodiscard]] double angle_distance(double a, double b);

/// Angle of the vector p->q in (-pi, pi]; empty when p == q.
[[nodiscard]] std::optional<double> bearing(Point p, Point q);

/// bearing() with a fixed value for coincident points.
[[nodiscard]] inline double bearing_or(Point p, Point q, double fallback) {
    return bearing(p, q).value_or(fallback);
}

/// Closed mode: |center gap| <= extent sum + slack on both axes.
/// Open mode: |center gap| < extent sum - slack on both axes.
[[nodiscard]] bool intersects(const Rect& a, const Rect& b, Boundary mode, double slack = 0.0);

/// Center of a rectangle with half-extents (dx, dy) tangent to `anchor`, lying
/// on the ray from the anchor center at angle `theta`. The result sits on the
/// boundary of the anchor grown by (dx, dy); a ray hitting a corner of that
/// grown rectangle returns the corner itself.
[[nodiscard]] Point placement_ring(const Rect& anchor, double dx, double dy, double theta);

}  // namespace rectcarto
