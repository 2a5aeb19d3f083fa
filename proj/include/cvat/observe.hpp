#pragma once

#include "cvat/sim.hpp"

#include <array>
#include <string>
#include <vector>

namespace cvat {

enum class ObservationKind { Vector, Raster };

struct ObservationMode {
    ObservationKind kind = ObservationKind::Vector;
    int raster_width = 84;
    int raster_height = 84;
    double vector_noise_std = 0.0;
    double rho_norm_cm = 150.0;      // distance normalizer, the evaluation's max allowed distance
    double apparent_size_cm = 12.5;  // target block height fraction = apparent_size / rho;
                                     // 12.5 makes a target at the optimal 50 cm span 1/4 image height

    void validate() const;
    int dim() const {
        return kind == ObservationKind::Vector ? 4 : raster_width * raster_height * 3;
    }
};

// The agent-visible observation. Vector layout is
// [visible_flag, rho/rho_norm clamped to [0,1], sin(theta), cos(theta)],
// all-zero when the target is out of the field of view. Raster is an
// HxWx3 row-major image with values in [0,1].
struct Observation {
    ObservationKind kind = ObservationKind::Vector;
    int width = 0;  // raster only
    int height = 0; // raster only
    std::vector<float> data;
};

// Per-episode scene palette. Target and wall colors are kept at least
// `min_color_separation` apart in max channel distance so the target is
// always detectable against the wall.
struct SceneRandomization {
    std::array<double, 3> wall_color{0.5, 0.5, 0.5};
    std::array<double, 3> floor_color{0.3, 0.3, 0.3};
    std::array<double, 3> target_color{1.0, 0.2, 0.2};
    double light = 1.0; // [0.4, 1.0]
};

inline constexpr double kMinColorSeparation = 0.3;

SceneRandomization randomize_scene(Rng& rng);

Observation observe(const WorldState& world, const ObservationMode& mode,
                    const SceneRandomization& scene, const ArenaConfig& cfg, Rng& rng);

// Geometry of the rendered target block, exposed for tests.
struct RasterBlock {
    bool visible = false;
    double center_col = 0.0; // fractional column of the block center
    int half_width = 0;
    int half_height = 0;
};
RasterBlock raster_block_geometry(const RelativeState& rel, const ObservationMode& mode,
                                  const ArenaConfig& cfg);

// Debug dump of a raster observation as a binary PPM (P6) image.
void write_ppm(const Observation& obs, const std::string& path);

} // namespace cvat
