#pragma once

#include <cmath>

namespace cvat {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Wraps an angle to (-pi, pi]; -pi maps to +pi.
inline double wrap_angle(double a) {
    double y = std::fmod(a + kPi, 2.0 * kPi);
    if (y <= 0.0) y += 2.0 * kPi;
    return y - kPi;
}

struct Pose2D {
    double x = 0.0;       // cm
    double y = 0.0;       // cm
    double heading = 0.0; // radians, wrapped to (-pi, pi], counterclockwise from +x
};

// Tracker-relative polar state of the target.
//
// Bearing sign convention: theta = wrap(heading - atan2(dy, dx)), so a
// positive theta means the target lies to the tracker's RIGHT. This is the
// convention under which the steering heuristic "w = -sign(theta) * ..."
// turns the tracker toward the target given the kinematic update
// "heading += w_norm * w_max" (positive w_norm = counterclockwise), and
// under which the raster projection maps positive bearings to the right
// half of the image.
struct RelativeState {
    double rho = 0.0;   // cm, >= 0
    double theta = 0.0; // radians, (-pi, pi]
};

inline RelativeState relative_state(const Pose2D& tracker, const Pose2D& target) {
    const double dx = target.x - tracker.x;
    const double dy = target.y - tracker.y;
    RelativeState rel;
    rel.rho = std::hypot(dx, dy);
    rel.theta = rel.rho > 0.0 ? wrap_angle(tracker.heading - std::atan2(dy, dx)) : 0.0;
    return rel;
}

} // namespace cvat
