#include <cmath>

#include <doctest.h>

#include "permstat/closedform.hpp"
#include "permstat/errors.hpp"
#include "permstat/montecarlo.hpp"
#include "permstat/rational.hpp"

using namespace permstat;

TEST_CASE("degenerate classes") {
    const Estimate identity_class = estimate_expected_inversions(5, 5, 1000, 9);
    CHECK(identity_class.mean == 0.0);
    CHECK(identity_class.std_error == 0.0);
    CHECK(identity_class.trials == 1000);

    const Estimate identity_precedence = estimate_precedence(5, 5, 1, 3, 1000, 9);
    CHECK(identity_precedence.mean == 1.0);
    CHECK(identity_precedence.std_error == 0.0);

    // the unique derangement of S_2 has exactly one inversion
    const Estimate two = estimate_expected_inversions(2, 0, 1000, 123);
    CHECK(two.mean == 1.0);
    CHECK(two.std_error == 0.0);
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(estimate_expected_inversions(5, 5, 1, 9), DomainError);
    CHECK_THROWS_AS(estimate_expected_inversions(5, 4, 100, 9), EmptyClassError);
    CHECK_THROWS_AS(estimate_precedence(5, 0, 3, 2, 100, 9), DomainError);
    CHECK_THROWS_AS(estimate_precedence(5, 0, 2, 2, 100, 9), DomainError);
}

TEST_CASE("bit-identical across worker counts") {
    const Estimate serial = estimate_expected_inversions(50, 0, 20000, 77, /*workers=*/1);
    const Estimate parallel = estimate_expected_inversions(50, 0, 20000, 77, /*workers=*/4);
    CHECK(serial.mean == parallel.mean);
    CHECK(serial.std_error == parallel.std_error);

    const Estimate serial_p = estimate_precedence(50, 2, 1, 50, 20000, 77, /*workers=*/1);
    const Estimate parallel_p = estimate_precedence(50, 2, 1, 50, 20000, 77, /*workers=*/3);
    CHECK(serial_p.mean == parallel_p.mean);
    CHECK(serial_p.std_error == parallel_p.std_error);

    // and across repeat runs
    const Estimate again = estimate_expected_inversions(50, 0, 20000, 77);
    CHECK(again.mean == serial.mean);
    CHECK(again.std_error == serial.std_error);
}

TEST_CASE("estimates agree with the closed forms") {
    const double exact50 = to_double(expected_inversions({50, 0}));
    const Estimate est50 = estimate_expected_inversions(50, 0, 20000, 31);
    CHECK(std::abs(est50.mean - exact50) <= 4 * est50.std_error);

    const double exact_p = to_double(precedence_probability({100, 0, 1, 100}));
    const Estimate est_p = estimate_precedence(100, 0, 1, 100, 20000, 31);
    CHECK(std::abs(est_p.mean - exact_p) <= 4 * est_p.std_error);

    // oracle value 1/2 at (3, 0, 1, 2)
    const Estimate est3 = estimate_precedence(3, 0, 1, 2, 10000, 5);
    CHECK(std::abs(est3.mean - 0.5) <= 4 * est3.std_error);
}

TEST_CASE("standard error shrinks like 1/sqrt(trials)") {
    const Estimate base = estimate_expected_inversions(50, 0, 20000, 1001);
    const Estimate doubled = estimate_expected_inversions(50, 0, 40000, 2002);
    const double ratio = base.std_error / doubled.std_error;
    CHECK(ratio > std::sqrt(2.0) * 0.8);
    CHECK(ratio < std::sqrt(2.0) * 1.2);
}

TEST_CASE("calibration: 2-sigma coverage at n = 50") {
    const double exact = to_double(expected_inversions({50, 0}));
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Estimate est = estimate_expected_inversions(50, 0, 10000, seed);
        if (std::abs(est.mean - exact) <= 2 * est.std_error)
            ++covered;
    }
    CHECK(covered >= 95);
}

TEST_CASE("chi-square uniformity") {
    const ChiSquareResult four = chi_square_uniformity(4, 100000, 8675309);
    CHECK(four.dof == 23);
    CHECK(four.statistic < 49.73); // 0.001 critical value

    const ChiSquareResult trivial = chi_square_uniformity(1, 100, 1);
    CHECK(trivial.statistic == 0.0);
    CHECK(trivial.dof == 0);

    CHECK_THROWS_AS(chi_square_uniformity(4, 200, 1), DomainError); // undersampled
    CHECK_THROWS_AS(chi_square_uniformity(7, 1000000, 1), DomainError);
    CHECK_THROWS_AS(chi_square_uniformity(0, 100, 1), DomainError);
}
