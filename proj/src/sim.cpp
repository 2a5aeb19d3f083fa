#include "cvat/sim.hpp"

#include "cvat/errors.hpp"

#include <cmath>

namespace cvat {

void ArenaConfig::validate() const {
    if (!(width_cm > 0.0) || !(height_cm > 0.0))
        throw ConfigError("arena: width and height must be positive");
    if (!(spawn_radius_min_cm > 0.0) || spawn_radius_min_cm > spawn_radius_max_cm)
        throw ConfigError("arena: need 0 < spawn_radius_min <= spawn_radius_max");
    if (spawn_radius_max_cm >= std::min(width_cm, height_cm) / 2.0)
        throw ConfigError("arena: spawn_radius_max must be < min(width, height)/2");
    if (!(fov_rad > 0.0) || fov_rad > kPi)
        throw ConfigError("arena: fov must be in (0, pi]");
    if (!(v_max_cm > 0.0) || !(w_max_rad > 0.0))
        throw ConfigError("arena: v_max and w_max must be positive");
    if (episode_len <= 0)
        throw ConfigError("arena: episode_len must be positive");
}

void RewardParams::validate() const {
    if (!(scale > 0.0)) throw ConfigError("reward: scale A must be positive");
    if (!(rho_max_cm > 0.0)) throw ConfigError("reward: rho_max must be positive");
    if (!(theta_max_rad > 0.0)) throw ConfigError("reward: theta_max must be positive");
}

Pose2D step_kinematics(const Pose2D& pose, const ActionCommand& cmd, const ArenaConfig& cfg) {
    const ActionCommand c = cmd.clamped();
    Pose2D out;
    out.heading = wrap_angle(pose.heading + c.w_norm * cfg.w_max_rad);
    out.x = pose.x + c.v_norm * cfg.v_max_cm * std::cos(out.heading);
    out.y = pose.y + c.v_norm * cfg.v_max_cm * std::sin(out.heading);
    out.x = std::clamp(out.x, 0.0, cfg.width_cm);
    out.y = std::clamp(out.y, 0.0, cfg.height_cm);
    return out;
}

WorldState spawn_episode(Rng& rng, const ArenaConfig& cfg) {
    cfg.validate();
    WorldState w;
    w.tracker.x = rng.uniform(0.0, cfg.width_cm);
    w.tracker.y = rng.uniform(0.0, cfg.height_cm);
    w.tracker.heading = wrap_angle(rng.uniform(-kPi, kPi));
    const double radius = rng.uniform(cfg.spawn_radius_min_cm, cfg.spawn_radius_max_cm);
    const double angle = rng.uniform(-kPi, kPi);
    w.target.x = std::clamp(w.tracker.x + radius * std::cos(angle), 0.0, cfg.width_cm);
    w.target.y = std::clamp(w.tracker.y + radius * std::sin(angle), 0.0, cfg.height_cm);
    w.target.heading = wrap_angle(rng.uniform(-kPi, kPi));
    w.step = 0;
    return w;
}

double reward(const RelativeState& rel, const RewardParams& p) {
    const double r_rho = std::max(0.0, 1.0 - std::abs(rel.rho - p.rho_star_cm) / p.rho_max_cm);
    const double d_theta = std::abs(wrap_angle(rel.theta - p.theta_star_rad));
    const double r_theta = std::max(0.0, 1.0 - d_theta / p.theta_max_rad);
    return p.scale * r_rho * r_theta;
}

} // namespace cvat
