#include "cvat/behaviors.hpp"

#include "cvat/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace cvat {

void BehaviorSpec::validate(const ArenaConfig& cfg) const {
    if (speed_cm < 0.0 || speed_cm > cfg.v_max_cm)
        throw ConfigError("behavior: speed must be in [0, v_max]");
    if (steering_rad < 0.0 || steering_rad > cfg.w_max_rad)
        throw ConfigError("behavior: steering must be in [0, w_max]");
    if (switch_prob < 0.0 || switch_prob > 1.0)
        throw ConfigError("behavior: switch_prob must be in [0, 1]");
    if (kind == BehaviorKind::RandomWaypoint && !(waypoint_radius_cm > 0.0))
        throw ConfigError("behavior: waypoint_radius must be positive");
}

namespace {

ActionCommand waypoint_command(const BehaviorSpec& spec, const Pose2D& pose,
                               const Pose2D& waypoint, const ArenaConfig& cfg) {
    const double bearing = std::atan2(waypoint.y - pose.y, waypoint.x - pose.x);
    const double turn = wrap_angle(bearing - pose.heading);
    ActionCommand cmd;
    cmd.w_norm = std::clamp(turn, -spec.steering_rad, spec.steering_rad) / cfg.w_max_rad;
    // Drive only when roughly facing the waypoint; otherwise turn in place.
    cmd.v_norm = std::abs(turn) < kPi / 2.0 ? spec.speed_cm / cfg.v_max_cm : 0.0;
    return cmd;
}

} // namespace

std::pair<ActionCommand, BehaviorState> target_action(const BehaviorSpec& spec,
                                                      const BehaviorState& state,
                                                      const WorldState& world,
                                                      const ArenaConfig& cfg, Rng& rng) {
    BehaviorState next = state;
    switch (spec.kind) {
    case BehaviorKind::Static:
        return {ActionCommand{0.0, 0.0}, next};
    case BehaviorKind::Circular: {
        if (spec.switch_prob > 0.0 && rng.bernoulli(spec.switch_prob)) next.direction = -next.direction;
        ActionCommand cmd;
        cmd.v_norm = spec.speed_cm / cfg.v_max_cm;
        cmd.w_norm = next.direction * spec.steering_rad / cfg.w_max_rad;
        return {cmd, next};
    }
    case BehaviorKind::RandomWaypoint: {
        const Pose2D& pose = world.target;
        bool need_new = !next.waypoint.has_value();
        if (!need_new) {
            const double d = std::hypot(next.waypoint->x - pose.x, next.waypoint->y - pose.y);
            need_new = d <= spec.waypoint_radius_cm;
        }
        if (need_new) {
            Pose2D wp;
            wp.x = rng.uniform(0.0, cfg.width_cm);
            wp.y = rng.uniform(0.0, cfg.height_cm);
            next.waypoint = wp;
        }
        return {waypoint_command(spec, pose, *next.waypoint, cfg), next};
    }
    }
    return {ActionCommand{}, next};
}

BehaviorSpec parse_behavior(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw ConfigError("behavior: empty scenario string");

    auto num = [&](size_t i, const char* what) {
        try {
            return std::stod(parts.at(i));
        } catch (const std::exception&) {
            throw ConfigError(std::string("behavior: bad ") + what + " in '" + text + "'");
        }
    };

    BehaviorSpec spec;
    if (parts[0] == "static") {
        if (parts.size() != 1) throw ConfigError("behavior: static takes no parameters");
        spec.kind = BehaviorKind::Static;
    } else if (parts[0] == "circular") {
        if (parts.size() != 4) throw ConfigError("behavior: expected circular:<speed>:<steering>:<switch_prob>");
        spec.kind = BehaviorKind::Circular;
        spec.speed_cm = num(1, "speed");
        spec.steering_rad = deg2rad(num(2, "steering"));
        spec.switch_prob = num(3, "switch_prob");
    } else if (parts[0] == "waypoint") {
        if (parts.size() != 3) throw ConfigError("behavior: expected waypoint:<speed>:<steering>");
        spec.kind = BehaviorKind::RandomWaypoint;
        spec.speed_cm = num(1, "speed");
        spec.steering_rad = deg2rad(num(2, "steering"));
    } else {
        throw ConfigError("behavior: unknown kind '" + parts[0] + "'");
    }
    return spec;
}

std::string behavior_to_string(const BehaviorSpec& spec) {
    char buf[96];
    switch (spec.kind) {
    case BehaviorKind::Static:
        return "static";
    case BehaviorKind::Circular:
        std::snprintf(buf, sizeof(buf), "circular:%g:%g:%g", spec.speed_cm,
                      rad2deg(spec.steering_rad), spec.switch_prob);
        return buf;
    case BehaviorKind::RandomWaypoint:
        std::snprintf(buf, sizeof(buf), "waypoint:%g:%g", spec.speed_cm, rad2deg(spec.steering_rad));
        return buf;
    }
    return "static";
}

} // namespace cvat
