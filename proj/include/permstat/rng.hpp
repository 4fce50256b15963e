#pragma once

#include <array>
#include <cstdint>

namespace permstat {

// Deterministic 64-bit generator: xoshiro256** (Blackman/Vigna), state
// expanded from the seed with the SplitMix64 sequence. Identical seed gives
// an identical output stream on every platform.
//
// A state is single-owner: share nothing, give each thread its own stream
// via for_stream.
class RngState {
public:
    explicit RngState(std::uint64_t seed);

    // Derived per-stream seeding: stream s uses seed' = mix64(seed + mix64(s)),
    // where mix64 is the SplitMix64 finalizer. Streams are decorrelated and
    // reproducible independently of how work is split across threads.
    static RngState for_stream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next();

    // Unbiased draw in [0, bound): values at or above the largest multiple of
    // `bound` below 2^64 are rejected and redrawn.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Uniform draw in 1..bound (convenience for 1-based labels).
    std::int64_t uniform_label(std::int64_t bound);

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
};

// SplitMix64 finalizer, the mixing primitive behind for_stream.
std::uint64_t mix64(std::uint64_t z);

} // namespace permstat
