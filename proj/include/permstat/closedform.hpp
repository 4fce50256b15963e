#pragma once

#include "permstat/rational.hpp"

namespace permstat {

// Closed forms for the inversion statistic on D_{n;k}, the permutations of
// [n] with exactly k fixed points, under the uniform measure on that class.
//
// Each exact value splits into a polynomial main term plus a factorially
// small correction proportional to [(-1)^m / m!] / E_m, where m = n - k and
// E_m = sum_{l<=m} (-1)^l / l! (the truncated series for 1/e). The class with
// k = n - 1 is empty and reported as EmptyClassError; n < 3 is below the
// formulas' range and reported as UnsupportedSizeError (use the oracle
// module there).

struct ClassQuery {
    long long n = 0;
    long long k = 0;
};

struct PrecedenceQuery {
    long long n = 0;
    long long k = 0;
    long long i = 0; // 1 <= i < j <= n
    long long j = 0;
};

// Ratios of the stage-(n-1) class frequencies d_{n-1,k-1}/(n-1)!,
// d_{n-1,k}/(n-1)!, d_{n-1,k+1}/(n-1)! to P_n(D_{n;k}). These are the three
// weights of the exact precedence formula. Requires n >= 3 and 0 <= k <= n-2.
struct ClassRatios {
    Rational fewer_fixed; // class with k-1 fixed points at stage n-1, = k
    Rational same_fixed;  // class with k fixed points
    Rational more_fixed;  // class with k+1 fixed points
};

ClassRatios class_ratios(ClassQuery q);

// Exact expected inversion count over D_{n;k}. Valid for k in {0..n} \ {n-1}.
Rational expected_inversions(ClassQuery q);

// The polynomial part: n(n-1)/4 - (k-1)n/6 - (k^2-k-1)/12. Valid for all
// 0 <= k <= n.
Rational expected_inversions_main(ClassQuery q);

// The remainder, exact = main + correction:
// [(-1)^{n-k}/(n-k)!] / E_{n-k} * (n-k-1)/12.
Rational inversion_correction(ClassQuery q);

// Exact probability that value i ends up left of value j under the uniform
// measure on D_{n;k}. Valid for k in {0..n-2} (three-part weighted sum via
// class_ratios) and k = n (the class is {identity}, so the value is 1).
Rational precedence_probability(PrecedenceQuery q);

// The polynomial part:
// 1/2 + [(2(k-1)(j-i) + k^2-3k+1)n - 2(k^2-k-1)(j-i)] / (2n(n-1)(n-2)).
Rational precedence_probability_main(PrecedenceQuery q);

// Derangement (k = 0) forms, written out independently from the general-k
// evaluators; the two routes agreeing exactly is a library invariant.
Rational derangement_expected_inversions(long long n);
Rational derangement_precedence_probability(long long n, long long i, long long j);

} // namespace permstat
