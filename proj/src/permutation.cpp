#include "permstat/permutation.hpp"

#include <numeric>
#include <sstream>

#include "permstat/errors.hpp"

namespace permstat {

Permutation Permutation::from_one_line(std::vector<std::int32_t> one_line) {
    const auto n = static_cast<std::int32_t>(one_line.size());
    if (n < 1)
        throw DomainError("permutation must have size >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int32_t label : one_line) {
        if (label < 1 || label > n)
            throw DomainError("label " + std::to_string(label) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(label - 1)])
            throw DomainError("duplicate label " + std::to_string(label));
        seen[static_cast<std::size_t>(label - 1)] = true;
    }
    return Permutation(std::move(one_line));
}

Permutation Permutation::identity(std::int32_t n) {
    if (n < 1)
        throw DomainError("permutation must have size >= 1");
    std::vector<std::int32_t> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::int32_t> word;
    long long label = 0;
    while (in >> label) {
        if (label < 1 || label > INT32_MAX)
            throw DomainError("label out of range: " + std::to_string(label));
        word.push_back(static_cast<std::int32_t>(label));
    }
    if (!in.eof()) {
        std::string rest;
        in.clear();
        in >> rest;
        throw DomainError("unexpected token '" + rest + "' in permutation");
    }
    return from_one_line(std::move(word));
}

std::int32_t Permutation::image(std::int32_t position) const {
    if (position < 1 || position > size())
        throw DomainError("position " + std::to_string(position) + " out of range");
    return one_line_[static_cast<std::size_t>(position - 1)];
}

std::int32_t Permutation::position_of(std::int32_t value) const {
    if (value < 1 || value > size())
        throw DomainError("value " + std::to_string(value) + " out of range");
    for (std::int32_t pos = 1; pos <= size(); ++pos)
        if (one_line_[static_cast<std::size_t>(pos - 1)] == value)
            return pos;
    return 0; // unreachable on a valid permutation
}

Permutation Permutation::inverse() const {
    std::vector<std::int32_t> inv(one_line_.size());
    for (std::int32_t pos = 1; pos <= size(); ++pos)
        inv[static_cast<std::size_t>(one_line_[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
    return Permutation(std::move(inv));
}

std::vector<std::int32_t> Permutation::fixed_points() const {
    std::vector<std::int32_t> fixed;
    for (std::int32_t pos = 1; pos <= size(); ++pos)
        if (one_line_[static_cast<std::size_t>(pos - 1)] == pos)
            fixed.push_back(pos);
    return fixed;
}

std::int32_t Permutation::fixed_point_count() const {
    std::int32_t count = 0;
    for (std::int32_t pos = 1; pos <= size(); ++pos)
        if (one_line_[static_cast<std::size_t>(pos - 1)] == pos)
            ++count;
    return count;
}

bool Permutation::precedes(std::int32_t i, std::int32_t j) const {
    if (i == j)
        throw DomainError("precedes requires distinct labels, got i = j = " + std::to_string(i));
    return position_of(i) < position_of(j);
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < one_line_.size(); ++t) {
        if (t > 0)
            out += ' ';
        out += std::to_string(one_line_[t]);
    }
    return out;
}

namespace {

// Fenwick tree over 1..n, point add / prefix sum.
class BitTree {
public:
    explicit BitTree(std::int32_t n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

    void add(std::int32_t index) {
        for (; index < static_cast<std::int32_t>(tree_.size()); index += index & -index)
            ++tree_[static_cast<std::size_t>(index)];
    }

    std::uint64_t prefix_sum(std::int32_t index) const {
        std::uint64_t sum = 0;
        for (; index > 0; index -= index & -index)
            sum += tree_[static_cast<std::size_t>(index)];
        return sum;
    }

private:
    std::vector<std::uint32_t> tree_;
};

} // namespace

std::uint64_t inversions(const Permutation& sigma) {
    const std::int32_t n = sigma.size();
    BitTree seen(n);
    std::uint64_t count = 0;
    for (std::int32_t pos = 1; pos <= n; ++pos) {
        const std::int32_t value = sigma.image(pos);
        // values already placed that are greater than this one
        count += static_cast<std::uint64_t>(pos - 1) - seen.prefix_sum(value);
        seen.add(value);
    }
    return count;
}

std::uint64_t inversions_naive(const Permutation& sigma) {
    const std::int32_t n = sigma.size();
    std::uint64_t count = 0;
    for (std::int32_t a = 1; a <= n; ++a)
        for (std::int32_t b = a + 1; b <= n; ++b)
            if (sigma.image(b) < sigma.image(a))
                ++count;
    return count;
}

} // namespace permstat
