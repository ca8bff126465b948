#pragma once

#include <cstdint>

namespace sbd {

// splitmix64: tiny splittable PRNG used for all seeded randomized checks.
// Deterministic for a fixed seed regardless of platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound > 0
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // independent child stream
    SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ull); }

  private:
    std::uint64_t state_;
};

} // namespace sbd
