#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace cvat {

// Seedable random source with explicit, implementation-independent
// distributions so that fixed seeds give bit-identical streams on any
// standard library. One Rng per worker/stream; never shared across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Inclusive integer range.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // Box-Muller; one draw per call, no cached spare.
    double normal(double mu, double sigma) {
        double u1 = unit();
        while (u1 <= 0.0) u1 = unit();
        const double u2 = unit();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * mag * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    bool bernoulli(double p) { return unit() < p; }

    // Derives an independent substream from (master, tag, index).
    static Rng derive(std::uint64_t master, std::string_view tag, std::uint64_t index = 0) {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            for (int i = 0; i < 8; ++i) {
                h ^= (v >> (8 * i)) & 0xff;
                h *= 1099511628211ull;
            }
        };
        mix(master);
        for (const char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        mix(index);
        // splitmix-style finalizer to spread low-entropy inputs
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 27;
        h *= 0x94d049bb133111ebull;
        h ^= h >> 31;
        return Rng(h);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace cvat
