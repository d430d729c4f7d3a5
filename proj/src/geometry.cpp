#include "rectcarto/geometry.hpp"

namespace rectcarto {

namespace {
constexpr double kPi = std::numbers::pi;
}

double normalize_angle(double theta) {
    if (theta > -kPi && theta <= kPi) {
        return theta;
    }
    double t = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
    if (t <= -kPi) {
        t += 2.0 * kPi;
    }
    return t;
}

double angle_distance(double a, double b) {
    double d = std::fabs(a - b);
    d = std::fmod(d, 2.0 * kPi);
    return d > kPi ? 2.0 * kPi - d : d;
}

std::optional<double> bearing(Point p, Point q) {
    const double vx = q.x - p.x;
    const double vy = q.y - p.y;
    if (vx == 0.0 && vy == 0.0) {
        return std::nullopt;
    }
    double theta = std::atan2(vy, vx);
    // atan2(-0.0, negative) yields -pi
    if (theta == -kPi) {
        theta = kPi;
    }
    return theta;
}

bool intersects(const Rect& a, const Rect& b, Boundary mode, double slack) {
    const double gap_x = std::fabs(a.x - b.x);
    const double gap_y = std::fabs(a.y - b.y);
    const double reach_x = a.dx + b.dx;
    const double reach_y = a.dy + b.dy;
    if (mode == Boundary::closed) {
        return gap_x <= reach_x + slack && gap_y <= reach_y + slack;
    }
    return gap_x < reach_x - slack && gap_y < reach_y - slack;
}

Point placement_ring(const Rect& anchor, double dx, double dy, double theta) {
    const double half_w = anchor.dx + dx;
    const double half_h = anchor.dy + dy;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double ac = std::fabs(c);
    const double as = std::fabs(s);

    // Compare the ray parameters half_w/|c| and half_h/|s| without dividing.
    const double lhs = half_w * as;
    const double rhs = half_h * ac;
    const double sx = c < 0.0 ? -1.0 : 1.0;
    const double sy = s < 0.0 ? -1.0 : 1.0;

    if (lhs == rhs) {
        return {anchor.x + sx * half_w, anchor.y + sy * half_h};
    }
    if (lhs < rhs) {
        // vertical edge x = +-half_w
        return {anchor.x + sx * half_w, anchor.y + half_w * s / ac};
    }
    // horizontal edge y = +-half_h
    return {anchor.x + half_h * c / as, anchor.y + sy * half_h};
}

}  // namespace rectcarto
