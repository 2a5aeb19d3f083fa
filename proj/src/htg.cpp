#include "cvat/htg.hpp"

#include "cvat/errors.hpp"

#include <cmath>

namespace cvat {

void NoiseConfig::validate() const {
    if (sigma < 0.0) throw ConfigError("noise: sigma must be >= 0");
}

namespace {
double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
} // namespace

ActionCommand htg_policy(const RelativeState& rel, const HtgParams& p) {
    const double theta_err = std::abs(wrap_angle(rel.theta - p.theta_star_rad));
    ActionCommand cmd;
    cmd.w_norm = -std::min(2.0 * theta_err / p.fov_rad, 1.0) * sign(rel.theta);
    if (theta_err < p.theta_align_gate_rad) {
        const double rho_err = rel.rho - p.rho_star_cm;
        cmd.v_norm = std::min(std::abs(rho_err) / p.rho_max_cm, 1.0) * sign(rho_err);
    }
    return cmd;
}

ActionCommand htg_noisy(const RelativeState& rel, const HtgParams& p, const NoiseConfig& noise,
                        Rng& rng) {
    ActionCommand cmd = htg_policy(rel, p);
    cmd.v_norm += rng.normal(noise.mu, noise.sigma);
    cmd.w_norm += rng.normal(noise.mu, noise.sigma);
    return cmd.clamped();
}

} // namespace cvat
