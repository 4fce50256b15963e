#include "permstat/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "permstat/errors.hpp"
#include "permstat/permutation.hpp"
#include "permstat/sampler.hpp"

namespace permstat {

namespace {

using u128 = unsigned __int128;

struct Moments {
    std::uint64_t count = 0;
    u128 sum = 0;
    u128 sum_squares = 0;

    void absorb(const Moments& other) {
        count += other.count;
        sum += other.sum;
        sum_squares += other.sum_squares;
    }
};

// Runs trials [begin, end) of the block-striped schedule. The per-trial
// statistic must depend only on its own stream's draws.
Moments run_blocks(std::uint64_t trials, std::uint64_t seed, int workers,
                   const std::function<std::uint64_t(RngState&)>& one_trial) {
    const std::uint64_t blocks = (trials + kTrialBlockSize - 1) / kTrialBlockSize;
    auto run_range = [&](std::uint64_t first_block, std::uint64_t last_block) {
        Moments acc;
        for (std::uint64_t b = first_block; b < last_block; ++b) {
            RngState rng = RngState::for_stream(seed, b);
            const std::uint64_t block_end = std::min(trials, (b + 1) * kTrialBlockSize);
            for (std::uint64_t t = b * kTrialBlockSize; t < block_end; ++t) {
                const std::uint64_t x = one_trial(rng);
                acc.count += 1;
                acc.sum += x;
                acc.sum_squares += static_cast<u128>(x) * x;
            }
        }
        return acc;
    };

    int thread_count = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    thread_count = std::max(1, std::min<int>(thread_count, 16));
    thread_count = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(thread_count), blocks));

    if (thread_count <= 1)
        return run_range(0, blocks);

    std::vector<Moments> partial(static_cast<std::size_t>(thread_count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int w = 0; w < thread_count; ++w) {
        const std::uint64_t first = blocks * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(thread_count);
        const std::uint64_t last = blocks * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(thread_count);
        pool.emplace_back([&, first, last, w] { partial[static_cast<std::size_t>(w)] = run_range(first, last); });
    }
    for (auto& t : pool)
        t.join();

    Moments total;
    for (const auto& m : partial) // integer sums: any order gives the same bits
        total.absorb(m);
    return total;
}

Estimate reduce(const Moments& m, std::uint64_t seed) {
    Estimate est;
    est.trials = m.count;
    est.seed = seed;
    const auto count = static_cast<long double>(m.count);
    const auto sum = static_cast<long double>(m.sum);
    const auto sum_squares = static_cast<long double>(m.sum_squares);
    est.mean = static_cast<double>(sum / count);
    long double variance = (sum_squares - sum * sum / count) / (count - 1);
    if (variance < 0)
        variance = 0; // rounding guard; exact sums make this all but impossible
    est.std_error = static_cast<double>(std::sqrt(variance / count));
    return est;
}

void check_trials(std::uint64_t trials) {
    if (trials < 2)
        throw DomainError("need at least 2 trials for a standard error, got " + std::to_string(trials));
}

} // namespace

Estimate estimate_expected_inversions(std::int32_t n, std::int32_t k, std::uint64_t trials,
                                      std::uint64_t seed, int workers) {
    check_trials(trials);
    const Moments m = run_blocks(trials, seed, workers, [n, k](RngState& rng) {
        return inversions(sample_class(n, k, rng));
    });
    return reduce(m, seed);
}

Estimate estimate_precedence(std::int32_t n, std::int32_t k, std::int32_t i, std::int32_t j,
                             std::uint64_t trials, std::uint64_t seed, int workers) {
    check_trials(trials);
    if (i < 1 || j > n || i >= j)
        throw DomainError("labels must satisfy 1 <= i < j <= n, got i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " n=" + std::to_string(n));
    const Moments m = run_blocks(trials, seed, workers, [n, k, i, j](RngState& rng) {
        return static_cast<std::uint64_t>(sample_class(n, k, rng).precedes(i, j));
    });
    return reduce(m, seed);
}

namespace {

// Rank in the factorial number system; bijection S_n -> [0, n!).
std::uint64_t lehmer_rank(const Permutation& sigma) {
    const std::int32_t n = sigma.size();
    std::uint64_t rank = 0;
    for (std::int32_t pos = 1; pos <= n; ++pos) {
        std::uint64_t smaller_later = 0;
        for (std::int32_t rest = pos + 1; rest <= n; ++rest)
            if (sigma.image(rest) < sigma.image(pos))
                ++smaller_later;
        rank = rank * static_cast<std::uint64_t>(n - pos + 1) + smaller_later;
    }
    return rank;
}

} // namespace

ChiSquareResult chi_square_uniformity(std::int32_t n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 1 || n > 6)
        throw DomainError("uniformity test supports 1 <= n <= 6, got n=" + std::to_string(n));
    std::uint64_t cells = 1;
    for (std::int32_t t = 2; t <= n; ++t)
        cells *= static_cast<std::uint64_t>(t);
    if (trials < 10 * cells)
        throw DomainError("undersampled: need trials >= 10 * n! = " + std::to_string(10 * cells) +
                          ", got " + std::to_string(trials));

    std::vector<std::uint64_t> observed(cells, 0);
    const std::uint64_t blocks = (trials + kTrialBlockSize - 1) / kTrialBlockSize;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        RngState rng = RngState::for_stream(seed, b);
        const std::uint64_t block_end = std::min(trials, (b + 1) * kTrialBlockSize);
        for (std::uint64_t t = b * kTrialBlockSize; t < block_end; ++t)
            ++observed[lehmer_rank(sample_uniform(n, rng))];
    }

    const double expected = static_cast<double>(trials) / static_cast<double>(cells);
    double statistic = 0.0;
    for (std::uint64_t count : observed) {
        const double diff = static_cast<double>(count) - expected;
        statistic += diff * diff / expected;
    }
    return {statistic, static_cast<std::int64_t>(cells) - 1};
}

} // namespace permstat
