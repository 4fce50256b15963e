#include "permstat/counting.hpp"

#include <string>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

void require_nonnegative(long long value, const char* name) {
    if (value < 0)
        throw DomainError(std::string(name) + " must be non-negative, got " + std::to_string(value));
}

} // namespace

Nat factorial(long long m) {
    require_nonnegative(m, "m");
    Nat r(1);
    for (long long t = 2; t <= m; ++t)
        r *= t;
    return r;
}

Nat binomial(long long m, long long r) {
    require_nonnegative(m, "m");
    require_nonnegative(r, "r");
    if (r > m)
        throw DomainError("binomial requires r <= m, got r=" + std::to_string(r) + " m=" + std::to_string(m));
    if (r > m - r)
        r = m - r;
    Nat result(1);
    for (long long t = 0; t < r; ++t) {
        result *= (m - t);
        result /= (t + 1); // exact: C(m,t+1) is integral
    }
    return result;
}

Nat derangement_count(long long m) {
    require_nonnegative(m, "m");
    if (m == 0)
        return Nat(1);
    Nat prev2(1), prev1(0); // d_0, d_1
    for (long long t = 2; t <= m; ++t) {
        Nat cur = (t - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

Nat rencontres_count(long long n, long long k) {
    require_nonnegative(n, "n");
    require_nonnegative(k, "k");
    if (k > n)
        throw DomainError("rencontres_count requires k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    return binomial(n, k) * derangement_count(n - k);
}

Rational alternating_partial_sum(long long m) {
    require_nonnegative(m, "m");
    Rational sum(0);
    Rational term(1); // (-1)^l / l!
    for (long long l = 0; l <= m; ++l) {
        if (l > 0)
            term /= -l;
        sum += term;
    }
    return sum;
}

Rational class_probability(long long n, long long k) {
    if (n < 1)
        throw DomainError("class_probability requires n >= 1, got n=" + std::to_string(n));
    return make_rational(Int(rencontres_count(n, k)), Int(factorial(n)));
}

} // namespace permstat
