#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

// A permutation of [n] in one-line notation, immutable after validated
// construction. Labels and positions are 1-based in the whole public
// interface; the 0-based vector layout is internal.
class Permutation {
public:
    // Validates that `one_line` is a bijection of {1,...,n}; throws
    // DomainError otherwise (n >= 1 required).
    static Permutation from_one_line(std::vector<std::int32_t> one_line);

    static Permutation identity(std::int32_t n);

    // Parses space-separated 1-based labels, e.g. "2 3 1".
    static Permutation parse(std::string_view text);

    std::int32_t size() const { return static_cast<std::int32_t>(one_line_.size()); }

    // sigma_i for position i in 1..n.
    std::int32_t image(std::int32_t position) const;

    // sigma^{-1}_value: the position of `value` in the one-line word.
    std::int32_t position_of(std::int32_t value) const;

    const std::vector<std::int32_t>& one_line() const { return one_line_; }

    Permutation inverse() const;

    // Positions i with sigma_i = i, ascending.
    std::vector<std::int32_t> fixed_points() const;
    std::int32_t fixed_point_count() const;

    // True iff value i sits strictly left of value j. Throws DomainError when
    // i == j or either label is out of range.
    bool precedes(std::int32_t i, std::int32_t j) const;

    std::string to_string() const;

    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<std::int32_t> one_line) : one_line_(std::move(one_line)) {}

    std::vector<std::int32_t> one_line_;
};

// Number of pairs i < j with sigma_j < sigma_i, counted in O(n log n) with a
// binary indexed tree over value ranks.
std::uint64_t inversions(const Permutation& sigma);

// Same contract, direct O(n^2) scan of the definition. Kept as the oracle for
// the fast counter.
std::uint64_t inversions_naive(const Permutation& sigma);

} // namespace permstat
