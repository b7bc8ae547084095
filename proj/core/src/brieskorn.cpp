#include "bmec/brieskorn.hpp"

#include <algorithm>
#include <limits>

namespace bmec {

namespace {

void require_positive_exponents(std::span<const Exponent> exponents) {
    if (exponents.empty())
        throw MathRefusal("empty sequence");
    for (Exponent a : exponents)
        if (a < 1)
            throw MathRefusal("values must be positive");
}

void require_coprime_closed_form(std::span<const Exponent> exponents) {
    if (exponents.size() < 3)
        throw MathRefusal("dimension below 3 not modeled");
    require_positive_exponents(exponents);
    if (!pairwise_coprime(exponents))
        throw MathRefusal("closed form proved only for pairwise coprime exponents");
}

// 2 |e_n(a) - e_{n+1}(a)|, the common denominator of all three routes.
BigInt mec_denominator(std::span<const Exponent> exponents) {
    const BigInt mu = principal_maslov_symmetric(exponents);
    if (mu == 0)
        throw MathRefusal("mean Euler characteristic undefined: mu_P = 0");
    return boost::multiprecision::abs(mu);
}

} // namespace

BrieskornExponents validate(std::span<const Exponent> exponents) {
    if (exponents.size() < 3)
        throw MathRefusal("dimension below 3 not modeled");
    require_positive_exponents(exponents);

    BrieskornExponents b;
    b.exponents.assign(exponents.begin(), exponents.end());
    b.n = static_cast<int>(exponents.size()) - 1;
    b.dimension = 2 * b.n - 1;
    b.pairwise_coprime = pairwise_coprime(exponents);
    b.has_unit_exponent =
        std::any_of(exponents.begin(), exponents.end(), [](Exponent a) { return a == 1; });
    b.integral_homology_sphere = b.pairwise_coprime;
    b.homeomorphic_to_sphere = b.pairwise_coprime && b.n > 2;
    return b;
}

const char* index_sign_name(IndexSign sign) {
    return sign == IndexSign::positive ? "positive" : "negative";
}

Rational principal_maslov(std::span<const Exponent> exponents) {
    require_positive_exponents(exponents);
    const Rational sum = unit_fraction_sum(exponents);
    return Rational(2) * Rational(lcm_all(exponents)) * (sum - 1);
}

BigInt principal_maslov_symmetric(std::span<const Exponent> exponents) {
    require_positive_exponents(exponents);
    const std::vector<BigInt> values = to_bigints(exponents);
    const std::size_t m = values.size(); // m = n + 1
    return 2 * (elementary_symmetric(std::span<const BigInt>(values), m - 1) -
                elementary_symmetric(std::span<const BigInt>(values), m));
}

IndexSign index_sign(std::span<const Exponent> exponents) {
    const Rational sum = unit_fraction_sum(exponents);
    if (sum == 1)
        throw MathRefusal("index sign undefined: mu_P = 0");
    return sum > 1 ? IndexSign::positive : IndexSign::negative;
}

BigInt mec_numerator(std::span<const Exponent> exponents) {
    require_positive_exponents(exponents);
    const std::size_t m = exponents.size(); // m = n + 1
    std::vector<BigInt> shifted;
    shifted.reserve(m);
    for (Exponent a : exponents)
        shifted.emplace_back(a - 1);

    const long long n = static_cast<long long>(m) - 1;
    BigInt total = 0;
    for (long long j = 0; j <= n - 1; ++j)
        total += BigInt(n - j) *
                 elementary_symmetric(std::span<const BigInt>(shifted),
                                      static_cast<std::size_t>(j));
    return total;
}

Rational mec_closed_form(std::span<const Exponent> exponents) {
    require_coprime_closed_form(exponents);
    const long long n = static_cast<long long>(exponents.size()) - 1;
    const BigInt num = BigInt(parity_sign(n + 1)) * mec_numerator(exponents);
    return make_rational(num, mec_denominator(exponents));
}

Rational mec_bruteforce(std::span<const Exponent> exponents, std::int64_t oracle_cap) {
    require_coprime_closed_form(exponents);

    BigInt principal_period = 1;
    for (Exponent a : exponents)
        principal_period *= a;
    if (principal_period > oracle_cap)
        throw BudgetExceeded("oracle too large");

    const auto period = static_cast<std::int64_t>(principal_period);
    std::int64_t generators = 0;
    for (std::int64_t t = 1; t <= period; ++t) {
        int closed = 0;
        for (Exponent a : exponents)
            if (t % a == 0)
                ++closed;
        if (closed >= 2)
            generators += closed - 1;
    }

    const long long n = static_cast<long long>(exponents.size()) - 1;
    const BigInt num = BigInt(parity_sign(n + 1)) * BigInt(generators);
    return make_rational(num, mec_denominator(exponents));
}

MecInput brieskorn_mec_input(std::span<const Exponent> exponents) {
    const int sign = parity_sign(static_cast<long long>(exponents.size()));
    MecInput input;
    for (OrbitSpace& s : enumerate_orbit_spaces(exponents)) {
        if (s.multiplicity == 0)
            continue; // a support missing a unit exponent never recurs on its own
        MecStratum stratum;
        stratum.period = std::move(s.period);
        stratum.degree_sign = sign;
        stratum.equivariant_euler = s.equivariant_euler;
        stratum.multiplicity = std::move(s.multiplicity);
        input.strata.push_back(std::move(stratum));
    }
    input.principal_maslov = principal_maslov_symmetric(exponents);
    return input;
}

Rational mec_via_engine(std::span<const Exponent> exponents) {
    require_coprime_closed_form(exponents);
    return mec_orbibundle(brieskorn_mec_input(exponents));
}

IndexCountSequence brieskorn_index_counts(std::span<const Exponent> exponents) {
    require_coprime_closed_form(exponents);
    const BigInt mu = principal_maslov_symmetric(exponents);
    if (mu <= 0)
        throw MathRefusal("index counts modeled for index-positive exponents only");
    if (mu > std::numeric_limits<long long>::max())
        throw BudgetExceeded("principal Maslov index too large to tabulate");

    const BigInt total = mec_numerator(exponents);
    if (total > std::numeric_limits<long long>::max())
        throw BudgetExceeded("generator count too large to tabulate");

    const long long offset = (exponents.size()) % 2; // parity of n + 1
    IndexCountSequence counts;
    counts.counts[offset] = static_cast<long long>(total);
    counts.tail = Periodicity{offset, static_cast<long long>(mu)};
    return counts;
}

BrieskornInvariants compute_invariants(const BrieskornExponents& profile) {
    BrieskornInvariants inv;
    inv.mu_p = principal_maslov(profile.exponents);
    inv.unit_fraction_sum = unit_fraction_sum(profile.exponents);
    if (inv.unit_fraction_sum != 1)
        inv.index_sign = inv.unit_fraction_sum > 1 ? IndexSign::positive : IndexSign::negative;
    if (profile.pairwise_coprime) {
        inv.mu_p_symmetric = principal_maslov_symmetric(profile.exponents);
        inv.mec = mec_closed_form(profile.exponents);
        inv.orbit_spaces = enumerate_orbit_spaces(profile.exponents);
    }
    return inv;
}

} // namespace bmec
