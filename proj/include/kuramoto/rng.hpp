#ifndef KURAMOTO_RNG_HPP
#define KURAMOTO_RNG_HPP

#include <cstdint>
#include <numbers>

namespace kuramoto {

/// SplitMix64 generator. Counter-style seeding (seed, seed+1, ...) yields
/// independent streams, which keeps batch runs reproducible regardless of
/// execution order or platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform phase angle in (-pi, pi].
    double angle() {
        return std::numbers::pi - 2.0 * std::numbers::pi * uniform01();
    }

private:
    std::uint64_t state_;
};

} // namespace kuramoto

#endif
