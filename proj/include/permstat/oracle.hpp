#pragma once

#include <optional>

#include "permstat/permutation.hpp"
#include "permstat/rational.hpp"

namespace permstat {

// Ground truth by exhaustive enumeration. Everything here walks all n!
// permutations, so sizes are hard-capped: the oracle exists to verify the
// closed forms, not to scale.
inline constexpr std::int32_t kOracleSizeCap = 10;

// Streams the permutations of [n] with exactly k fixed points, each exactly
// once, in lexicographic one-line order (or reversed, for order-independence
// checks). Throws SizeCapError for n > kOracleSizeCap.
class ClassEnumerator {
public:
    enum class Order { lexicographic, reverse_lexicographic };

    ClassEnumerator(std::int32_t n, std::int32_t k, Order order = Order::lexicographic);

    std::optional<Permutation> next();

private:
    std::int32_t k_;
    Order order_;
    bool exhausted_ = false;
    std::vector<std::int32_t> word_;
};

struct ClassSummary {
    std::int32_t n = 0;
    std::int32_t k = 0;
    Nat class_size;
    Nat inversion_total;
    Rational expected_inversions; // inversion_total / class_size
};

// Exact mean inversion count over D_{n;k}, by definition. Throws
// EmptyClassError when the class is empty.
ClassSummary oracle_expected_inversions(std::int32_t n, std::int32_t k);

// Exact fraction of the class with value i left of value j. Requires i < j.
Rational oracle_precedence(std::int32_t n, std::int32_t k, std::int32_t i, std::int32_t j);

} // namespace permstat
