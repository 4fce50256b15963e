#include "permstat/closedform.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "permstat/counting.hpp"
#include "permstat/errors.hpp"

namespace permstat {

namespace {

// Which k are acceptable for a given evaluator.
enum class KRange {
    full,           // 0..n
    nonempty,       // 0..n without n-1 (k = n-1 is the empty class)
    below_full,     // 0..n-2 (the stage-(n-1) quotients need a nonempty neighborhood)
};

void check_class(ClassQuery q, KRange range) {
    if (q.n < 3)
        throw UnsupportedSizeError("closed forms require n >= 3, got n=" + std::to_string(q.n) +
                                   " (use exhaustive enumeration below that)");
    if (q.k < 0 || q.k > q.n)
        throw DomainError("k must lie in 0..n, got k=" + std::to_string(q.k) + " n=" + std::to_string(q.n));
    if (range == KRange::below_full && q.k > q.n - 2)
        throw DomainError("k must lie in 0..n-2, got k=" + std::to_string(q.k) + " n=" + std::to_string(q.n));
    if (range == KRange::nonempty && q.k == q.n - 1)
        throw EmptyClassError("no permutation of [n] has exactly n-1 fixed points (n=" + std::to_string(q.n) + ")");
}

void check_pair(PrecedenceQuery q) {
    if (q.i < 1 || q.j > q.n || q.i >= q.j)
        throw DomainError("labels must satisfy 1 <= i < j <= n, got i=" + std::to_string(q.i) +
                          " j=" + std::to_string(q.j) + " n=" + std::to_string(q.n));
}

// Memoized (-1)^m / m! and E_m. Both get hit for every (n, k) the identity
// suites sweep, and recomputing E_m is O(m) rational operations.
struct SeriesCache {
    std::mutex guard;
    std::vector<Rational> signed_inverse_factorials; // (-1)^m / m!
    std::vector<Rational> partial_sums;              // E_m

    void grow_to(long long m) {
        while (static_cast<long long>(signed_inverse_factorials.size()) <= m) {
            const auto l = static_cast<long long>(signed_inverse_factorials.size());
            Rational term = make_rational(Int(1), Int(factorial(l)));
            signed_inverse_factorials.push_back(l % 2 == 0 ? term : -term);
            partial_sums.push_back(alternating_partial_sum(l));
        }
    }
};

SeriesCache& series_cache() {
    static SeriesCache cache;
    return cache;
}

// (-1)^m / m!
Rational signed_inverse_factorial(long long m) {
    auto& cache = series_cache();
    std::scoped_lock lock(cache.guard);
    cache.grow_to(m);
    return cache.signed_inverse_factorials[static_cast<std::size_t>(m)];
}

// E_m = sum_{l<=m} (-1)^l / l!
Rational partial_sum(long long m) {
    auto& cache = series_cache();
    std::scoped_lock lock(cache.guard);
    cache.grow_to(m);
    return cache.partial_sums[static_cast<std::size_t>(m)];
}

// [(-1)^m / m!] / E_m, the factor carried by every correction term.
// E_1 = 0, so m = 1 (the empty class) must be excluded by the caller.
Rational truncation_ratio(long long m) {
    return signed_inverse_factorial(m) / partial_sum(m);
}

} // namespace

ClassRatios class_ratios(ClassQuery q) {
    check_class(q, KRange::below_full);
    const long long m = q.n - q.k; // >= 2 here
    const Rational eps = partial_sum(m);
    ClassRatios r;
    r.fewer_fixed = Rational(q.k);
    r.same_fixed = 1 - signed_inverse_factorial(m) / eps;
    r.more_fixed = (1 - (signed_inverse_factorial(m - 1) + signed_inverse_factorial(m)) / eps) /
                   Rational(q.k + 1);
    return r;
}

Rational expected_inversions_main(ClassQuery q) {
    check_class(q, KRange::full);
    const Rational n(q.n), k(q.k);
    return n * (n - 1) / 4 - (k - 1) * n / 6 - (k * k - k - 1) / 12;
}

Rational inversion_correction(ClassQuery q) {
    check_class(q, KRange::nonempty);
    const long long m = q.n - q.k;
    return truncation_ratio(m) * make_rational(Int(m - 1), Int(12));
}

Rational expected_inversions(ClassQuery q) {
    return expected_inversions_main(q) + inversion_correction(q);
}

Rational precedence_probability_main(PrecedenceQuery q) {
    check_class({q.n, q.k}, KRange::full);
    check_pair(q);
    const Rational n(q.n), k(q.k), gap(q.j - q.i);
    const Rational numer = (2 * (k - 1) * gap + k * k - 3 * k + 1) * n - 2 * (k * k - k - 1) * gap;
    return make_rational(1, 2) + numer / (2 * n * (n - 1) * (n - 2));
}

Rational precedence_probability(PrecedenceQuery q) {
    check_class({q.n, q.k}, KRange::nonempty);
    check_pair(q);
    if (q.k == q.n)
        return Rational(1); // the class is {identity} and i < j

    const ClassRatios w = class_ratios({q.n, q.k});
    const Rational n(q.n), k(q.k), i(q.i), j(q.j);
    const Rational cube = n * (n - 1) * (n - 2);

    // Contribution of stage-(n-1) classes with k-1, k, k+1 fixed points.
    const Rational fewer = (k - 1) / (n * (n - 1)) + (n - k) * (j - 2) / cube;
    const Rational same = k * (n - k - 1) * (n - i - 1) / cube +
                          (n - k - 1) * (i - 1 + n - j + (n - 2) * (n - 3 - k) / 2) / cube;
    const Rational more = (k + 1) * k * (n - i - 1) / cube +
                          (n - 2 - k) * (k + 1) / (2 * n * (n - 1));

    return w.fewer_fixed * fewer + w.same_fixed * same + w.more_fixed * more;
}

Rational derangement_expected_inversions(long long n) {
    if (n < 3)
        throw UnsupportedSizeError("closed forms require n >= 3, got n=" + std::to_string(n));
    const Rational nn(n);
    return nn * (nn - 1) / 4 + nn / 6 + make_rational(1, 12) +
           truncation_ratio(n) * make_rational(Int(n - 1), Int(12));
}

Rational derangement_precedence_probability(long long n, long long i, long long j) {
    if (n < 3)
        throw UnsupportedSizeError("closed forms require n >= 3, got n=" + std::to_string(n));
    check_pair({n, 0, i, j});
    const Rational nn(n), gap(j - i);
    return make_rational(1, 2) + ((1 - 2 * gap) * nn + 2 * gap) / (2 * nn * (nn - 1) * (nn - 2)) +
           truncation_ratio(n) * (2 * gap - nn) / (2 * nn * (nn - 2));
}

} // namespace permstat
