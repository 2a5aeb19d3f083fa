#pragma once

#include "cvat/sim.hpp"

namespace cvat {

// Gaussian exploration noise, added independently per action component.
struct NoiseConfig {
    double mu = 0.0;
    double sigma = 0.5;

    void validate() const;
};

// Parameters of the heuristic tracking policy. The alignment gate keeps the
// translational command at zero until the bearing error falls below
// `theta_align_gate` (strict comparison).
struct HtgParams {
    double fov_rad = kPi / 2.0;
    double rho_star_cm = 50.0;
    double rho_max_cm = 20.0;
    double theta_star_rad = 0.0;
    double theta_align_gate_rad = deg2rad(10.0);
};

// Deterministic simulator-privileged tracking policy:
//   w = -min(2|theta - theta*| / FOV, 1) * sign(theta)
//   v = min(|rho - rho*| / rho_max, 1) * sign(rho - rho*)   if |theta - theta*| < gate
//       0                                                   otherwise
// with sign(0) = 0. The steering term uses sign(theta), not
// sign(theta - theta*), so the policy is only meaningful for theta* = 0.
ActionCommand htg_policy(const RelativeState& rel, const HtgParams& p);

// htg_policy plus clamped Gaussian noise on each component.
ActionCommand htg_noisy(const RelativeState& rel, const HtgParams& p, const NoiseConfig& noise,
                        Rng& rng);

} // namespace cvat
