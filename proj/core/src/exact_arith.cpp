#include "bmec/exact_arith.hpp"

#include <numeric>

namespace bmec {

namespace {

void require_positive(std::span<const Exponent> values) {
    if (values.empty())
        throw MathRefusal("empty sequence");
    for (Exponent v : values)
        if (v < 1)
            throw MathRefusal("values must be positive");
}

} // namespace

Rational make_rational(BigInt numerator, BigInt denominator) {
    if (denominator == 0)
        throw MathRefusal("zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    return Rational(std::move(numerator), std::move(denominator));
}

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

BigInt floor_rat(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r); // positive by canonical form
    BigInt q = num / den;              // truncates toward zero
    if (num < 0 && q * den != num)
        --q;
    return q;
}

BigInt ceil_rat(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    BigInt q = num / den;
    if (num > 0 && q * den != num)
        ++q;
    return q;
}

bool is_half_integer(const Rational& r) {
    return denominator(r) <= 2;
}

int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}

std::vector<BigInt> to_bigints(std::span<const Exponent> values) {
    return std::vector<BigInt>(values.begin(), values.end());
}

BigInt elementary_symmetric(std::span<const BigInt> values, std::size_t degree) {
    if (degree > values.size())
        throw MathRefusal("elementary symmetric degree exceeds sequence length");
    // e[d] over a growing prefix: e_d(v_0..v_i) = e_d(v_0..v_{i-1}) + v_i e_{d-1}(v_0..v_{i-1})
    std::vector<BigInt> e(degree + 1);
    e[0] = 1;
    std::size_t seen = 0;
    for (const BigInt& v : values) {
        ++seen;
        const std::size_t top = std::min(degree, seen);
        for (std::size_t d = top; d >= 1; --d)
            e[d] += v * e[d - 1];
    }
    return e[degree];
}

BigInt elementary_symmetric(std::span<const Exponent> values, std::size_t degree) {
    const std::vector<BigInt> big = to_bigints(values);
    return elementary_symmetric(std::span<const BigInt>(big), degree);
}

BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0)
        throw MathRefusal("binomial arguments must be nonnegative");
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at every step
    }
    return r;
}

bool pairwise_coprime(std::span<const Exponent> values) {
    require_positive(values);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (std::gcd(values[i], values[j]) != 1)
                return false;
    return true;
}

BigInt lcm_all(std::span<const Exponent> values) {
    require_positive(values);
    BigInt l = 1;
    for (Exponent v : values)
        l = boost::multiprecision::lcm(l, BigInt(v));
    return l;
}

Rational unit_fraction_sum(std::span<const Exponent> values) {
    require_positive(values);
    Rational s = 0;
    for (Exponent v : values)
        s += make_rational(1, v);
    return s;
}

} // namespace bmec
