#ifndef MSCB_RNG_HPP
#define MSCB_RNG_HPP

#include <cstdint>

namespace mscb {

/// SplitMix64: tiny, seedable, identical output on every platform.
/// Used everywhere randomness is needed so that test corpora can be
/// regenerated bit-for-bit from a recorded seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform value in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace mscb

#endif
