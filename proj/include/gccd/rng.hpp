#pragma once

#include <cstdint>

namespace gccd {

// SplitMix64. Chosen over std::mt19937_64 + <random> distributions because
// distribution output is implementation-defined; golden tests need the same
// stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    int bit() { return static_cast<int>(next() >> 63); }

    // True with probability rate (rate in [0,1]).
    bool bernoulli(double rate) {
        if (rate <= 0.0) return false;
        if (rate >= 1.0) return true;
        return static_cast<double>(next()) < rate * 18446744073709551616.0;
    }

private:
    std::uint64_t state_;
};

// Independent per-index stream so trial results do not depend on execution
// order.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return SplitMix64(mixer.next());
}

}  // namespace gccd
