#include "permstat/rng.hpp"

#include <bit>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RngState::RngState(std::uint64_t seed) : seed_(seed) {
    // SplitMix64 state expansion, the seeding recommended for xoshiro.
    std::uint64_t sm = seed;
    for (auto& word : state_) {
        sm += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = sm;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        word = z ^ (z >> 31);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
        state_[0] = 1; // xoshiro must not start from the all-zero state
}

RngState RngState::for_stream(std::uint64_t seed, std::uint64_t stream) {
    return RngState(mix64(seed + mix64(stream)));
}

std::uint64_t RngState::next() {
    // xoshiro256**
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

std::uint64_t RngState::uniform_below(std::uint64_t bound) {
    if (bound == 0)
        throw DomainError("uniform_below requires bound >= 1");
    // 2^64 mod bound; draws below this would bias the remainder.
    const std::uint64_t reject_below = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t raw = next();
        if (raw >= reject_below)
            return raw % bound;
    }
}

std::int64_t RngState::uniform_label(std::int64_t bound) {
    if (bound < 1)
        throw DomainError("uniform_label requires bound >= 1, got " + std::to_string(bound));
    return static_cast<std::int64_t>(uniform_below(static_cast<std::uint64_t>(bound))) + 1;
}

} // namespace permstat
