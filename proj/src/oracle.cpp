#include "permstat/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

void check_enumerable(std::int32_t n, std::int32_t k) {
    if (n < 1)
        throw DomainError("enumeration requires n >= 1, got n=" + std::to_string(n));
    if (n > kOracleSizeCap)
        throw SizeCapError("enumeration capped at n <= " + std::to_string(kOracleSizeCap) +
                           ", got n=" + std::to_string(n));
    if (k < 0 || k > n)
        throw DomainError("k must lie in 0..n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
}

std::int32_t fixed_point_count(const std::vector<std::int32_t>& word) {
    std::int32_t count = 0;
    for (std::size_t t = 0; t < word.size(); ++t)
        if (word[t] == static_cast<std::int32_t>(t) + 1)
            ++count;
    return count;
}

} // namespace

ClassEnumerator::ClassEnumerator(std::int32_t n, std::int32_t k, Order order)
    : k_(k), order_(order), word_(static_cast<std::size_t>(n)) {
    check_enumerable(n, k);
    std::iota(word_.begin(), word_.end(), 1);
    if (order_ == Order::reverse_lexicographic)
        std::reverse(word_.begin(), word_.end());
}

std::optional<Permutation> ClassEnumerator::next() {
    while (!exhausted_) {
        const bool hit = fixed_point_count(word_) == k_;
        std::optional<Permutation> result;
        if (hit)
            result = Permutation::from_one_line(word_);
        exhausted_ = order_ == Order::lexicographic
                         ? !std::next_permutation(word_.begin(), word_.end())
                         : !std::prev_permutation(word_.begin(), word_.end());
        if (hit)
            return result;
    }
    return std::nullopt;
}

ClassSummary oracle_expected_inversions(std::int32_t n, std::int32_t k) {
    check_enumerable(n, k);
    ClassSummary summary;
    summary.n = n;
    summary.k = k;
    summary.class_size = 0;
    summary.inversion_total = 0;

    ClassEnumerator stream(n, k);
    while (auto sigma = stream.next()) {
        summary.class_size += 1;
        summary.inversion_total += inversions(*sigma);
    }
    if (summary.class_size == 0)
        throw EmptyClassError("no permutation of [" + std::to_string(n) + "] has exactly " +
                              std::to_string(k) + " fixed points");
    summary.expected_inversions = make_rational(Int(summary.inversion_total), Int(summary.class_size));
    return summary;
}

Rational oracle_precedence(std::int32_t n, std::int32_t k, std::int32_t i, std::int32_t j) {
    check_enumerable(n, k);
    if (i < 1 || j > n || i >= j)
        throw DomainError("labels must satisfy 1 <= i < j <= n, got i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " n=" + std::to_string(n));

    Nat class_size = 0;
    Nat hits = 0;
    ClassEnumerator stream(n, k);
    while (auto sigma = stream.next()) {
        class_size += 1;
        if (sigma->precedes(i, j))
            hits += 1;
    }
    if (class_size == 0)
        throw EmptyClassError("no permutation of [" + std::to_string(n) + "] has exactly " +
                              std::to_string(k) + " fixed points");
    return make_rational(Int(hits), Int(class_size));
}

} // namespace permstat
