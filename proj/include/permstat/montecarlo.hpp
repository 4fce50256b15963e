#pragma once

#include <cstdint>
#include <optional>

#include "permstat/rational.hpp"

namespace permstat {

// Sampling-based checks for scales where enumeration is impossible.
//
// Trials are numbered 0..trials-1 and grouped into fixed blocks of 4096;
// block b draws from the derived stream RngState::for_stream(seed, b). Block
// accumulators are exact integers, so the reduced estimate is bit-identical
// no matter how many workers the blocks are spread over.

inline constexpr std::uint64_t kTrialBlockSize = 4096;

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / sqrt(trials)
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<Rational> target; // exact closed-form value, when the caller has one
};

// Sample mean and standard error of the inversion count over `trials` draws
// from the k-fixed-point class. Requires trials >= 2; class preconditions as
// in sample_class. `workers` 0 picks a thread count automatically; any value
// yields the same Estimate.
Estimate estimate_expected_inversions(std::int32_t n, std::int32_t k, std::uint64_t trials,
                                      std::uint64_t seed, int workers = 0);

// Bernoulli mean and standard error of the event "value i left of value j".
Estimate estimate_precedence(std::int32_t n, std::int32_t k, std::int32_t i, std::int32_t j,
                             std::uint64_t trials, std::uint64_t seed, int workers = 0);

struct ChiSquareResult {
    double statistic = 0.0;
    std::int64_t dof = 0; // n! - 1
};

// Pearson statistic of `trials` uniform samples against the flat distribution
// over all n! permutations. Requires n <= 6 and trials >= 10 * n! so every
// cell is well populated; DomainError otherwise.
ChiSquareResult chi_square_uniformity(std::int32_t n, std::uint64_t trials, std::uint64_t seed);

} // namespace permstat
