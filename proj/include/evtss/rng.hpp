#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace evtss {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with splitmix64 seeding. All sampling in the library goes
// through this generator so results are bit-reproducible across platforms
// (no dependence on libstdc++ distribution internals).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    // Independent stream for parallel work; the union of streams is
    // deterministic regardless of how they are scheduled.
    static Rng stream(std::uint64_t root_seed, std::uint64_t stream_index) {
        std::uint64_t mix = root_seed;
        splitmix64(mix);
        mix ^= 0xA0761D6478BD642FULL * (stream_index + 1);
        return Rng(mix);
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) {
            return (x << k) | (x >> (64 - k));
        };
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1).
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; two uniforms per draw, no cached spare (keeps the draw
    // sequence independent of call pairing).
    double normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double exponential() { return -std::log(uniform01()); }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::array<std::uint64_t, 4> state_{};
};

}  // namespace evtss
