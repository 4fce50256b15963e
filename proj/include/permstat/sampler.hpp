#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/rng.hpp"

namespace permstat {

// The circular-table seating construction. Person q entering a room with m
// people seated sits, each with probability 1/(m+1), immediately to the left
// of one of the m seated persons or alone at a new table. Reading "who sits
// to the left of whom" after seating 1..n gives a uniformly random
// permutation of [n], with the tables as its cycles.
class CrpState {
public:
    // Labels 1..capacity may be seated.
    explicit CrpState(std::int32_t capacity);

    // Seats `label` using one uniform draw over the seated_count()+1 equally
    // likely choices. Throws DomainError on duplicate or out-of-range labels.
    void insert(std::int32_t label, RngState& rng);

    std::int32_t capacity() const { return static_cast<std::int32_t>(left_.size()); }
    std::int32_t seated_count() const { return static_cast<std::int32_t>(seated_.size()); }
    bool is_seated(std::int32_t label) const;

    // The person seated immediately to the left of `label`, i.e. sigma(label).
    std::int32_t left_of(std::int32_t label) const;

    // Tables as cycles: each starts at its smallest label, tables ordered by
    // that label.
    std::vector<std::vector<std::int32_t>> tables() const;

    // Requires the seated labels to be exactly {1..seated_count()}.
    Permutation to_permutation() const;

private:
    std::vector<std::int32_t> left_; // 0 = label not seated; 1-based labels
    std::vector<std::int32_t> seated_; // insertion order
};

// Uniformly random permutation of [n] via the seating construction,
// inserting labels 1..n in order.
Permutation sample_uniform(std::int32_t n, RngState& rng);

// Same construction with an explicit insertion order (any permutation of the
// labels 1..n, e.g. with one label moved to the end). The result is uniform
// regardless of the order.
Permutation sample_uniform(std::span<const std::int32_t> insertion_order, RngState& rng);

// Uniform over the derangements of [n], by rejection from sample_uniform.
// The acceptance rate is d_n/n! -> 1/e, so about e tries on average.
// Throws EmptyClassError for n < 2 (d_1 = 0, and size-0 is not a Permutation).
Permutation sample_derangement(std::int32_t n, RngState& rng);

// Uniform over the permutations of [n] with exactly k fixed points: a uniform
// k-subset of fixed labels plus a uniform derangement of the rest.
// Throws EmptyClassError for k = n-1 and DomainError for k > n or n < 1.
Permutation sample_class(std::int32_t n, std::int32_t k, RngState& rng);

} // namespace permstat
