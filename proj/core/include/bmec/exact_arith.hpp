#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bmec/errors.hpp"

namespace bmec {

// Every invariant computed by this library is an exact rational: lowest
// terms, positive denominator, decidable equality. Floating point never
// enters the computation path, since the results of interest are exact
// equalities like chi_m = (-1)^(n+1)/2.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Brieskorn exponents a_0,...,a_n. Small by themselves (<= 10^4 in the
// supported range); everything derived from them (periods, symmetric
// polynomials, Maslov indices) lives in BigInt.
using Exponent  = std::int64_t;
using Exponents = std::vector<Exponent>;

Rational make_rational(BigInt numerator, BigInt denominator);

// "p/q" with the denominator always shown.
std::string to_fraction_string(const Rational& r);

BigInt floor_rat(const Rational& r);
BigInt ceil_rat(const Rational& r);

// 2r integral, i.e. r is an integer or half an odd integer.
bool is_half_integer(const Rational& r);

// (-1)^k
int parity_sign(long long k);

std::vector<BigInt> to_bigints(std::span<const Exponent> values);

// Elementary symmetric polynomial e_degree of the values; e_0 = 1.
// degree > values.size() is refused, not zero-filled.
BigInt elementary_symmetric(std::span<const BigInt> values, std::size_t degree);
BigInt elementary_symmetric(std::span<const Exponent> values, std::size_t degree);

// C(n, k); zero when k > n.
BigInt binomial(long long n, long long k);

// gcd(a_i, a_j) = 1 for all i < j. Values must be positive; an empty
// sequence is an error, never a default.
bool pairwise_coprime(std::span<const Exponent> values);

// Least common multiple; equals the product when pairwise coprime.
BigInt lcm_all(std::span<const Exponent> values);

// sum_j 1/a_j as an exact rational.
Rational unit_fraction_sum(std::span<const Exponent> values);

} // namespace bmec
