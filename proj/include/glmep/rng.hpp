#pragma once

#include "glmep/math_util.hpp"

#include <cstdint>
#include <random>

namespace glmep {

// splitmix64 step; used both as a mixer for seed derivation and to seed the engine
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// deterministic sub-stream seed: hash(master, stream)
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

// Deterministic RNG. Gaussians come from the inverse normal CDF so that the
// stream does not depend on the standard library's normal_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        // 53-bit mantissa in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        double u = uniform01();
        if (u <= 0.0) u = 0x1.0p-53;
        return normal_icdf(u);
    }

    double rademacher() { return (engine_() >> 63) ? -1.0 : 1.0; }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace glmep
