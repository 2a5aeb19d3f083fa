#pragma once

#include "cvat/sim.hpp"

#include <optional>
#include <string>

namespace cvat {

enum class BehaviorKind { Static, Circular, RandomWaypoint };

// Scripted target motion. Speeds are absolute caps in cm/step and rad/step;
// emitted commands are normalized against the arena's v_max/w_max and never
// exceed these caps in magnitude.
struct BehaviorSpec {
    BehaviorKind kind = BehaviorKind::Static;
    double speed_cm = 0.0;
    double steering_rad = 0.0;
    double switch_prob = 0.01;        // circular: per-step direction flip
    double waypoint_radius_cm = 20.0; // random_waypoint: arrival distance

    void validate(const ArenaConfig& cfg) const;
};

struct BehaviorState {
    int direction = +1; // circular turn direction, +1 or -1
    std::optional<Pose2D> waypoint;
};

// One step of the target's scripted policy. Pure state transition; the rng
// stream is owned by the caller.
std::pair<ActionCommand, BehaviorState> target_action(const BehaviorSpec& spec,
                                                      const BehaviorState& state,
                                                      const WorldState& world,
                                                      const ArenaConfig& cfg, Rng& rng);

// Scenario names accepted on the command line:
//   static
//   circular:<speed_cm>:<steering_deg>:<switch_prob>
//   waypoint:<speed_cm>:<steering_deg>
BehaviorSpec parse_behavior(const std::string& text);
std::string behavior_to_string(const BehaviorSpec& spec);

} // namespace cvat
