#include "cvat/observe.hpp"

#include "cvat/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace cvat {

void ObservationMode::validate() const {
    if (kind == ObservationKind::Raster && (raster_width < 8 || raster_height < 8))
        throw ConfigError("observation: raster dims must be >= 8");
    if (vector_noise_std < 0.0)
        throw ConfigError("observation: vector_noise_std must be >= 0");
    if (!(rho_norm_cm > 0.0))
        throw ConfigError("observation: rho_norm must be positive");
    if (!(apparent_size_cm > 0.0))
        throw ConfigError("observation: apparent_size must be positive");
}

SceneRandomization randomize_scene(Rng& rng) {
    SceneRandomization s;
    auto color = [&rng] {
        return std::array<double, 3>{rng.unit(), rng.unit(), rng.unit()};
    };
    s.wall_color = color();
    s.floor_color = color();
    s.light = rng.uniform(0.4, 1.0);
    // Rejection-resample until the target stands out from the wall.
    for (;;) {
        s.target_color = color();
        double dist = 0.0;
        for (int c = 0; c < 3; ++c)
            dist = std::max(dist, std::abs(s.target_color[c] - s.wall_color[c]));
        if (dist >= kMinColorSeparation) break;
    }
    return s;
}

RasterBlock raster_block_geometry(const RelativeState& rel, const ObservationMode& mode,
                                  const ArenaConfig& cfg) {
    RasterBlock block;
    if (!in_fov(rel, cfg.fov_rad)) return block;
    block.visible = true;
    const double half_fov = cfg.fov_rad / 2.0;
    block.center_col = (rel.theta / half_fov + 1.0) / 2.0 * mode.raster_width;
    const double size_frac =
        rel.rho > 0.0 ? std::clamp(mode.apparent_size_cm / rel.rho, 0.0, 1.0) : 1.0;
    const int block_h = std::max(1, static_cast<int>(std::lround(size_frac * mode.raster_height)));
    const int block_w = std::max(1, block_h / 2);
    block.half_height = block_h / 2;
    block.half_width = block_w / 2;
    return block;
}

namespace {

Observation observe_vector(const RelativeState& rel, const ObservationMode& mode,
                           const ArenaConfig& cfg, Rng& rng) {
    Observation obs;
    obs.kind = ObservationKind::Vector;
    obs.data.assign(4, 0.0f);
    if (!in_fov(rel, cfg.fov_rad)) return obs; // out of view: no information
    const double rho_n = std::clamp(rel.rho / mode.rho_norm_cm, 0.0, 1.0);
    double v[4] = {1.0, rho_n, std::sin(rel.theta), std::cos(rel.theta)};
    if (mode.vector_noise_std > 0.0) {
        v[1] = std::clamp(v[1] + rng.normal(0.0, mode.vector_noise_std), 0.0, 1.0);
        v[2] = std::clamp(v[2] + rng.normal(0.0, mode.vector_noise_std), -1.0, 1.0);
        v[3] = std::clamp(v[3] + rng.normal(0.0, mode.vector_noise_std), -1.0, 1.0);
    }
    for (int i = 0; i < 4; ++i) obs.data[i] = static_cast<float>(v[i]);
    return obs;
}

Observation observe_raster(const RelativeState& rel, const ObservationMode& mode,
                           const SceneRandomization& scene, const ArenaConfig& cfg) {
    Observation obs;
    obs.kind = ObservationKind::Raster;
    obs.width = mode.raster_width;
    obs.height = mode.raster_height;
    obs.data.resize(static_cast<size_t>(obs.width) * obs.height * 3);

    const int horizon = obs.height / 2;
    auto shade = [&](const std::array<double, 3>& c, int ch) {
        return static_cast<float>(std::clamp(c[ch] * scene.light, 0.0, 1.0));
    };
    for (int row = 0; row < obs.height; ++row) {
        const auto& base = row < horizon ? scene.wall_color : scene.floor_color;
        float px[3] = {shade(base, 0), shade(base, 1), shade(base, 2)};
        float* line = obs.data.data() + static_cast<size_t>(row) * obs.width * 3;
        for (int col = 0; col < obs.width; ++col) {
            line[col * 3 + 0] = px[0];
            line[col * 3 + 1] = px[1];
            line[col * 3 + 2] = px[2];
        }
    }

    const RasterBlock block = raster_block_geometry(rel, mode, cfg);
    if (block.visible) {
        const int cc = static_cast<int>(std::lround(block.center_col));
        const int col_lo = std::max(0, cc - block.half_width);
        const int col_hi = std::min(obs.width - 1, cc + block.half_width);
        const int row_lo = std::max(0, horizon - block.half_height);
        const int row_hi = std::min(obs.height - 1, horizon + block.half_height);
        const float tc[3] = {shade(scene.target_color, 0), shade(scene.target_color, 1),
                             shade(scene.target_color, 2)};
        for (int row = row_lo; row <= row_hi; ++row) {
            float* line = obs.data.data() + static_cast<size_t>(row) * obs.width * 3;
            for (int col = col_lo; col <= col_hi; ++col) {
                line[col * 3 + 0] = tc[0];
                line[col * 3 + 1] = tc[1];
                line[col * 3 + 2] = tc[2];
            }
        }
    }
    return obs;
}

} // namespace

Observation observe(const WorldState& world, const ObservationMode& mode,
                    const SceneRandomization& scene, const ArenaConfig& cfg, Rng& rng) {
    const RelativeState rel = relative_state(world.tracker, world.target);
    if (mode.kind == ObservationKind::Vector) return observe_vector(rel, mode, cfg, rng);
    return observe_raster(rel, mode, scene, cfg);
}

void write_ppm(const Observation& obs, const std::string& path) {
    if (obs.kind != ObservationKind::Raster)
        throw IoError("write_ppm: observation is not a raster");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_ppm: cannot open " + path);
    out << "P6\n" << obs.width << " " << obs.height << "\n255\n";
    for (const float v : obs.data) {
        const int byte = std::clamp(static_cast<int>(std::lround(v * 255.0f)), 0, 255);
        out.put(static_cast<char>(byte));
    }
    if (!out) throw IoError("write_ppm: write failed for " + path);
}

} // namespace cvat
