#include "permstat/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

CrpState::CrpState(std::int32_t capacity) {
    if (capacity < 0)
        throw DomainError("capacity must be non-negative");
    left_.assign(static_cast<std::size_t>(capacity), 0);
}

bool CrpState::is_seated(std::int32_t label) const {
    return label >= 1 && label <= capacity() && left_[static_cast<std::size_t>(label - 1)] != 0;
}

void CrpState::insert(std::int32_t label, RngState& rng) {
    if (label < 1 || label > capacity())
        throw DomainError("label " + std::to_string(label) + " out of range 1.." + std::to_string(capacity()));
    if (is_seated(label))
        throw DomainError("label " + std::to_string(label) + " already seated");

    const auto m = static_cast<std::int64_t>(seated_.size());
    const std::int64_t choice = rng.uniform_label(m + 1);
    if (choice == m + 1) {
        // new table: alone, so the person to its own left
        left_[static_cast<std::size_t>(label - 1)] = label;
    } else {
        // sit immediately to the left of the choice-th seated person
        const std::int32_t host = seated_[static_cast<std::size_t>(choice - 1)];
        left_[static_cast<std::size_t>(label - 1)] = left_[static_cast<std::size_t>(host - 1)];
        left_[static_cast<std::size_t>(host - 1)] = label;
    }
    seated_.push_back(label);
}

std::int32_t CrpState::left_of(std::int32_t label) const {
    if (!is_seated(label))
        throw DomainError("label " + std::to_string(label) + " is not seated");
    return left_[static_cast<std::size_t>(label - 1)];
}

std::vector<std::vector<std::int32_t>> CrpState::tables() const {
    std::vector<std::vector<std::int32_t>> result;
    std::vector<bool> visited(left_.size(), false);
    for (std::int32_t label = 1; label <= capacity(); ++label) {
        if (!is_seated(label) || visited[static_cast<std::size_t>(label - 1)])
            continue;
        std::vector<std::int32_t> cycle;
        std::int32_t cur = label;
        do {
            visited[static_cast<std::size_t>(cur - 1)] = true;
            cycle.push_back(cur);
            cur = left_[static_cast<std::size_t>(cur - 1)];
        } while (cur != label);
        result.push_back(std::move(cycle));
    }
    return result;
}

Permutation CrpState::to_permutation() const {
    const std::int32_t n = seated_count();
    std::vector<std::int32_t> word(static_cast<std::size_t>(n));
    for (std::int32_t label = 1; label <= n; ++label) {
        if (!is_seated(label))
            throw DomainError("seated labels are not 1.." + std::to_string(n));
        word[static_cast<std::size_t>(label - 1)] = left_[static_cast<std::size_t>(label - 1)];
    }
    return Permutation::from_one_line(std::move(word));
}

Permutation sample_uniform(std::int32_t n, RngState& rng) {
    if (n < 1)
        throw DomainError("sample_uniform requires n >= 1");
    CrpState state(n);
    for (std::int32_t label = 1; label <= n; ++label)
        state.insert(label, rng);
    return state.to_permutation();
}

Permutation sample_uniform(std::span<const std::int32_t> insertion_order, RngState& rng) {
    const auto n = static_cast<std::int32_t>(insertion_order.size());
    if (n < 1)
        throw DomainError("sample_uniform requires n >= 1");
    CrpState state(n);
    for (std::int32_t label : insertion_order)
        state.insert(label, rng);
    return state.to_permutation();
}

Permutation sample_derangement(std::int32_t n, RngState& rng) {
    if (n < 2)
        throw EmptyClassError("no derangement of size " + std::to_string(n));
    for (;;) {
        Permutation candidate = sample_uniform(n, rng);
        if (candidate.fixed_point_count() == 0)
            return candidate;
    }
}

Permutation sample_class(std::int32_t n, std::int32_t k, RngState& rng) {
    if (n < 1)
        throw DomainError("sample_class requires n >= 1");
    if (k < 0 || k > n)
        throw DomainError("k must lie in 0..n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (k == n - 1)
        throw EmptyClassError("no permutation of [n] has exactly n-1 fixed points (n=" + std::to_string(n) + ")");
    if (k == n)
        return Permutation::identity(n);

    // Uniform k-subset of fixed labels: Fisher-Yates prefix.
    std::vector<std::int32_t> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (std::int32_t t = 0; t < k; ++t) {
        const auto offset = static_cast<std::size_t>(rng.uniform_below(static_cast<std::uint64_t>(n - t)));
        std::swap(pool[static_cast<std::size_t>(t)], pool[static_cast<std::size_t>(t) + offset]);
    }
    std::vector<bool> is_fixed(static_cast<std::size_t>(n), false);
    for (std::int32_t t = 0; t < k; ++t)
        is_fixed[static_cast<std::size_t>(pool[static_cast<std::size_t>(t)] - 1)] = true;

    // Unfixed labels, ascending; derange them among their own positions.
    std::vector<std::int32_t> moved;
    moved.reserve(static_cast<std::size_t>(n - k));
    for (std::int32_t label = 1; label <= n; ++label)
        if (!is_fixed[static_cast<std::size_t>(label - 1)])
            moved.push_back(label);

    const Permutation inner = sample_derangement(n - k, rng);
    std::vector<std::int32_t> word(static_cast<std::size_t>(n));
    for (std::int32_t label = 1; label <= n; ++label)
        if (is_fixed[static_cast<std::size_t>(label - 1)])
            word[static_cast<std::size_t>(label - 1)] = label;
    for (std::int32_t t = 1; t <= n - k; ++t)
        word[static_cast<std::size_t>(moved[static_cast<std::size_t>(t - 1)] - 1)] =
            moved[static_cast<std::size_t>(inner.image(t) - 1)];
    return Permutation::from_one_line(std::move(word));
}

} // namespace permstat
