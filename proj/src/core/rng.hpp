#pragma once

#include "core/rational.hpp"

#include <cstdint>

namespace nonloc {

/// SplitMix64 in counter mode.
///
/// The stream is the pure function mix(key + i * GAMMA) of a 64-bit key and
/// a call counter i, so identical seed + identical call sequence yields an
/// identical sample stream, and split() derives an independent child stream
/// from the parent's current position. GAMMA and the mixing function are
/// the standard SplitMix64 constants (Steele, Lea & Flood).
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : key_(seed) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * GAMMA); }

    /// Independent child stream; advances this stream by one step.
    SeedStream split() { return SeedStream(mix(next_u64() ^ SPLIT_SALT)); }

    /// Exact uniform draw from {0, 1, ..., bound-1} by rejection over
    /// fixed-width blocks of next_u64(). bound must be positive.
    BigInt uniform_below(const BigInt& bound);

private:
    static constexpr std::uint64_t GAMMA = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t SPLIT_SALT = 0xbf58476d1ce4e5b9ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace nonloc
