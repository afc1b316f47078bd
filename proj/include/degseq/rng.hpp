#pragma once

#include <cstdint>

namespace degseq {

// Platform-stable generator: splitmix64.  std::mt19937 plus
// std::uniform_int_distribution would be implementation-defined, which breaks
// frozen-seed tests, so all randomness in the library goes through this.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via masked rejection; exact and stable.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ULL >> __builtin_clzll((bound - 1) | 1);
        for (;;) {
            std::uint64_t v = next_u64() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Independent substream for one sample index.  Monte Carlo estimates are
// computed per-sample from substream(seed, k), which makes the result a
// function of (seed, samples) alone, independent of thread count or schedule.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (index + 0x632BE59BD9B4E019ULL));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
}

}  // namespace degseq
