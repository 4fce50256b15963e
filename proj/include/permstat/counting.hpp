#pragma once

#include "permstat/rational.hpp"

namespace permstat {

// Exact combinatorics of fixed-point classes. All values are unbounded
// integers / rationals; inputs are small machine integers (the outputs grow
// factorially, so callers pick their n with care).

// m!
Nat factorial(long long m);

// C(m, r); throws DomainError unless 0 <= r <= m.
Nat binomial(long long m, long long r);

// Number of derangements of [m]. Computed by the recurrence
// d_m = (m-1)(d_{m-1} + d_{m-2}), d_0 = 1, d_1 = 0.
Nat derangement_count(long long m);

// Number of permutations of [n] with exactly k fixed points:
// d_{n,k} = C(n,k) * d_{n-k}. Throws DomainError unless 0 <= k <= n.
Nat rencontres_count(long long n, long long k);

// The truncated series for e^{-1}: sum_{l=0}^{m} (-1)^l / l!.
// Equals derangement_count(m) / factorial(m); computed here by the sum so the
// two routes stay independent.
Rational alternating_partial_sum(long long m);

// Probability that a uniform permutation of [n] has exactly k fixed points,
// d_{n,k} / n!. Throws DomainError unless 1 <= n and 0 <= k <= n.
Rational class_probability(long long n, long long k);

} // namespace permstat
