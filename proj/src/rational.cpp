#include "permstat/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "permstat/errors.hpp"

namespace permstat {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0)
        return Rational(-num, -den);
    return Rational(num, den);
}

std::string to_fraction_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num_part) || !is_int(den_part))
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    return make_rational(Int(std::string(num_part)), Int(std::string(den_part)));
}

namespace {

Int pow10(int e) {
    Int r(1);
    for (int t = 0; t < e; ++t)
        r *= 10;
    return r;
}

// floor(log10(p/q)) for p, q > 0
int decimal_exponent(const Int& p, const Int& q) {
    const int dp = static_cast<int>(p.str().size());
    const int dq = static_cast<int>(q.str().size());
    // p/q lies in [10^(dp-dq-1), 10^(dp-dq+1))
    int e = dp - dq - 1;
    if (e + 1 >= 0 ? p >= q * pow10(e + 1) : p * pow10(-(e + 1)) >= q)
        ++e;
    return e;
}

void strip_trailing_zeros(std::string& mantissa) {
    if (mantissa.find('.') == std::string::npos)
        return;
    while (mantissa.back() == '0')
        mantissa.pop_back();
    if (mantissa.back() == '.')
        mantissa.pop_back();
}

} // namespace

std::string to_decimal_string(const Rational& value, int digits) {
    if (digits < 1)
        throw DomainError("decimal rendering needs at least one digit");
    if (value == 0)
        return "0";
    Int p = numerator(value);
    const Int q = denominator(value);
    const bool negative = p < 0;
    if (negative)
        p = -p;

    int e = decimal_exponent(p, q);
    // Scale so that round(p' / q') carries exactly `digits` significant digits,
    // rounding half away from zero: floor(x + 1/2) = (2*num + den) / (2*den).
    const int shift = digits - 1 - e;
    const Int num = shift >= 0 ? p * pow10(shift) : p;
    const Int den = shift >= 0 ? q : q * pow10(-shift);
    Int scaled = (2 * num + den) / (2 * den);
    if (scaled == pow10(digits)) { // 9.99... rounded up a magnitude
        scaled = pow10(digits - 1);
        ++e;
    }

    std::string d = scaled.str();
    std::string mantissa;
    if (e >= 0 && e < digits) {
        mantissa = d.substr(0, e + 1);
        if (e + 1 < digits)
            mantissa += "." + d.substr(e + 1);
        strip_trailing_zeros(mantissa);
    } else if (e < 0 && e >= -5) {
        mantissa = "0." + std::string(-e - 1, '0') + d;
        strip_trailing_zeros(mantissa);
    } else {
        mantissa = d.substr(0, 1);
        if (digits > 1)
            mantissa += "." + d.substr(1);
        strip_trailing_zeros(mantissa);
        mantissa += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(std::abs(e));
    }
    return negative ? "-" + mantissa : mantissa;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace permstat
