#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "permstat/counting.hpp"
#include "permstat/errors.hpp"
#include "permstat/oracle.hpp"
#include "permstat/rational.hpp"
#include "permstat/sampler.hpp"

using namespace permstat;

TEST_CASE("rng streams are deterministic") {
    RngState a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int t = 0; t < 100; ++t) {
        const std::uint64_t x = a.next();
        all_equal = all_equal && x == b.next();
        any_diff = any_diff || x != c.next();
    }
    CHECK(all_equal);
    CHECK(any_diff);

    RngState s0 = RngState::for_stream(42, 0);
    RngState s0_again = RngState::for_stream(42, 0);
    RngState s1 = RngState::for_stream(42, 1);
    CHECK(s0.next() == s0_again.next());
    CHECK(s0.next() != s1.next()); // overwhelmingly likely for a sane mix
}

TEST_CASE("uniform_below is unbiased") {
    RngState rng(7);
    CHECK_THROWS_AS(rng.uniform_below(0), DomainError);
    for (int t = 0; t < 20; ++t)
        CHECK(rng.uniform_below(1) == 0);

    const int draws = 70000;
    std::vector<int> counts(7, 0);
    for (int t = 0; t < draws; ++t)
        ++counts[static_cast<std::size_t>(rng.uniform_below(7))];
    // each cell: mean 10000, sd ~ sqrt(draws * p(1-p)) ~ 92.6; allow 5 sigma
    for (int cell = 0; cell < 7; ++cell)
        CHECK(std::abs(counts[static_cast<std::size_t>(cell)] - 10000) < 463);
}

TEST_CASE("seating construction basics") {
    RngState rng(1);
    CrpState state(4);
    state.insert(1, rng);
    CHECK(state.seated_count() == 1);
    CHECK(state.left_of(1) == 1); // alone at a table
    CHECK(state.tables() == std::vector<std::vector<std::int32_t>>{{1}});
    CHECK_THROWS_AS(state.insert(1, rng), DomainError);
    CHECK_THROWS_AS(state.insert(5, rng), DomainError);
    CHECK_THROWS_AS(state.left_of(2), DomainError);

    SUBCASE("second person joins or starts a table, about half and half") {
        int joined = 0;
        const int runs = 4000;
        for (int seed = 0; seed < runs; ++seed) {
            RngState r(static_cast<std::uint64_t>(seed));
            CrpState s(2);
            s.insert(1, r);
            s.insert(2, r);
            if (s.tables().size() == 1) {
                ++joined; // 2 sat to the left of 1
                CHECK(s.left_of(1) == 2);
                CHECK(s.left_of(2) == 1);
            } else {
                CHECK(s.left_of(2) == 2);
            }
        }
        // mean 2000, sd ~ 31.6; allow 5 sigma
        CHECK(std::abs(joined - 2000) < 158);
    }
}

TEST_CASE("uniform sampling") {
    RngState rng(99);
    CHECK(sample_uniform(1, rng) == Permutation::identity(1));
    CHECK_THROWS_AS(sample_uniform(0, rng), DomainError);

    SUBCASE("deterministic given the seed") {
        RngState a(5), b(5);
        for (int t = 0; t < 20; ++t)
            CHECK(sample_uniform(30, a) == sample_uniform(30, b));
    }

    SUBCASE("tables are the cycles") {
        for (int seed = 0; seed < 50; ++seed) {
            RngState r(static_cast<std::uint64_t>(seed));
            CrpState s(20);
            for (std::int32_t label = 1; label <= 20; ++label)
                s.insert(label, r);
            const Permutation sigma = s.to_permutation();
            const auto tables = s.tables();
            for (const auto& table : tables) {
                // following sigma from any member walks the whole table
                std::int32_t cur = table.front();
                for (std::size_t hop = 0; hop < table.size(); ++hop)
                    cur = sigma.image(cur);
                CHECK(cur == table.front());
            }
            CHECK(static_cast<int>(sigma.fixed_point_count()) ==
                  static_cast<int>(std::count_if(tables.begin(), tables.end(),
                                                 [](const auto& t) { return t.size() == 1; })));
        }
    }

    SUBCASE("insertion order does not matter for validity or uniformity") {
        // person 3 enters last; outcomes over S_3 stay uniform
        const std::vector<std::int32_t> order{1, 2, 4, 3};
        std::map<std::string, int> counts;
        RngState r(12345);
        const int draws = 12000;
        for (int t = 0; t < draws; ++t)
            ++counts[sample_uniform(order, r).to_string()];
        CHECK(counts.size() == 24);
        double statistic = 0.0;
        for (const auto& [word, count] : counts) {
            const double expected = draws / 24.0;
            statistic += (count - expected) * (count - expected) / expected;
        }
        CHECK(statistic < 49.73); // 0.001 critical value, 23 dof
    }
}

TEST_CASE("construction is consistent under deleting the last label") {
    for (std::int32_t n = 2; n <= 50; ++n)
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            RngState rng = RngState::for_stream(0xC0C0, seed * 64 + static_cast<std::uint64_t>(n));
            CrpState state(n);
            for (std::int32_t label = 1; label < n; ++label)
                state.insert(label, rng);
            const Permutation smaller = state.to_permutation();
            state.insert(n, rng);
            const Permutation larger = state.to_permutation();

            // drop n from its cycle
            bool consistent = true;
            for (std::int32_t i = 1; i < n; ++i) {
                const std::int32_t image = larger.image(i) == n ? larger.image(n) : larger.image(i);
                consistent = consistent && image == smaller.image(i);
            }
            CHECK(consistent);
        }
}

TEST_CASE("derangement sampling") {
    RngState rng(2024);
    CHECK_THROWS_AS(sample_derangement(0, rng), EmptyClassError);
    CHECK_THROWS_AS(sample_derangement(1, rng), EmptyClassError);

    for (int t = 0; t < 10; ++t)
        CHECK(sample_derangement(2, rng) == Permutation::from_one_line({2, 1}));

    SUBCASE("n = 3: both derangements equally often") {
        int first = 0;
        const int draws = 10000;
        for (int t = 0; t < draws; ++t)
            if (sample_derangement(3, rng) == Permutation::from_one_line({2, 3, 1}))
                ++first;
        // mean 5000, sd 50; allow 5 sigma
        CHECK(std::abs(first - 5000) < 250);
    }

    SUBCASE("acceptance rate approaches 1/e") {
        for (std::int32_t n : {8, 10, 20}) {
            int fixed_point_free = 0;
            const int draws = 100000;
            for (int t = 0; t < draws; ++t)
                if (sample_uniform(n, rng).fixed_point_count() == 0)
                    ++fixed_point_free;
            const double rate = fixed_point_free / static_cast<double>(draws);
            CHECK(rate > 0.35);
            CHECK(rate < 0.39);
            // within 4 sigma of the exact derangement fraction d_n/n!
            const double exact = to_double(class_probability(n, 0));
            CHECK(std::abs(rate - exact) < 4 * std::sqrt(exact * (1 - exact) / draws));
        }
    }
}

TEST_CASE("class sampling") {
    RngState rng(31337);
    CHECK(sample_class(5, 5, rng) == Permutation::identity(5));
    CHECK_THROWS_AS(sample_class(5, 4, rng), EmptyClassError);
    CHECK_THROWS_AS(sample_class(5, 6, rng), DomainError);
    CHECK_THROWS_AS(sample_class(5, -1, rng), DomainError);
    CHECK_THROWS_AS(sample_class(0, 0, rng), DomainError);

    SUBCASE("every draw has exactly k fixed points") {
        for (std::int32_t n = 1; n <= 12; ++n)
            for (std::int32_t k = 0; k <= n; ++k) {
                if (k == n - 1)
                    continue;
                for (int t = 0; t < 200; ++t)
                    REQUIRE(sample_class(n, k, rng).fixed_point_count() == k);
            }
    }

    SUBCASE("deterministic given (n, k, seed)") {
        RngState a(64), b(64);
        for (int t = 0; t < 20; ++t)
            CHECK(sample_class(15, 3, a) == sample_class(15, 3, b));
    }

    SUBCASE("n = 3, k = 1: all three members equally often") {
        std::map<std::string, int> counts;
        const int draws = 9000;
        for (int t = 0; t < draws; ++t)
            ++counts[sample_class(3, 1, rng).to_string()];
        CHECK(counts.size() == 3);
        for (const auto& [word, count] : counts)
            CHECK(std::abs(count - 3000) < 224); // 5 sigma, sd ~ 44.7
    }

    SUBCASE("uniform over the nine derangements of S_4") {
        std::map<std::string, int> counts;
        const int draws = 100000;
        for (int t = 0; t < draws; ++t)
            ++counts[sample_class(4, 0, rng).to_string()];
        CHECK(counts.size() == 9);
        double statistic = 0.0;
        const double expected = draws / 9.0;
        for (const auto& [word, count] : counts)
            statistic += (count - expected) * (count - expected) / expected;
        CHECK(statistic < 26.1245); // 0.001 critical value, 8 dof
    }
}
