#pragma once

#include "cvat/geometry.hpp"
#include "cvat/rng.hpp"

#include <algorithm>

namespace cvat {

// Normalized control pair; v_norm scales forward speed, w_norm scales turn
// rate (positive = counterclockwise).
struct ActionCommand {
    double v_norm = 0.0;
    double w_norm = 0.0;

    ActionCommand clamped() const {
        return {std::clamp(v_norm, -1.0, 1.0), std::clamp(w_norm, -1.0, 1.0)};
    }
};

struct ArenaConfig {
    double width_cm = 500.0;
    double height_cm = 500.0;
    double spawn_radius_min_cm = 30.0;
    double spawn_radius_max_cm = 150.0;
    double fov_rad = kPi / 2.0;          // 90 deg
    double v_max_cm = 8.0;               // per step
    double w_max_rad = deg2rad(8.0);     // per step
    int episode_len = 250;

    void validate() const;
};

struct RewardParams {
    double scale = 0.1;                  // A
    double rho_star_cm = 50.0;
    double rho_max_cm = 20.0;
    double theta_star_rad = 0.0;
    double theta_max_rad = deg2rad(10.0);

    void validate() const;
};

struct WorldState {
    Pose2D tracker;
    Pose2D target;
    int step = 0;
};

// Unicycle update, dt = 1 step, rotate-then-translate. Position is clamped
// to the arena rectangle (hard walls, no bounce, no collision event).
Pose2D step_kinematics(const Pose2D& pose, const ActionCommand& cmd, const ArenaConfig& cfg);

// Tracker uniform in the arena with uniform heading; target on a uniform-
// radius annulus [spawn_radius_min, spawn_radius_max] around the tracker at
// a uniform angle, so it may start outside the field of view. Both poses
// clamped inside the arena; step = 0.
WorldState spawn_episode(Rng& rng, const ArenaConfig& cfg);

// r = A * max(0, 1 - |rho-rho*|/rho_max) * max(0, 1 - |theta-theta*|/theta_max)
double reward(const RelativeState& rel, const RewardParams& p);

// Boundary inclusive: |theta| == fov/2 counts as visible.
inline bool in_fov(const RelativeState& rel, double fov_rad) {
    return std::abs(rel.theta) <= fov_rad / 2.0;
}

} // namespace cvat
