#pragma once

#include <cstdint>

namespace hashdrift {

// splitmix64: tiny, deterministic across platforms, which std::
// distributions are not. Used wherever replayable randomness matters.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is irrelevant at these ranges.
    std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace hashdrift
