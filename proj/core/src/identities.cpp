#include "bmec/identities.hpp"

#include <sstream>

#include "bmec/brieskorn.hpp"
#include "bmec/tuple_enum.hpp"

namespace bmec {

namespace {

std::string tuple_string(std::span<const Exponent> exponents) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i)
            out << ",";
        out << exponents[i];
    }
    out << ")";
    return out.str();
}

} // namespace

BigInt f_value(long long n) {
    if (n < 1)
        throw MathRefusal("f is defined for n >= 1");
    BigInt total = 0;
    for (long long j = 0; j <= n; ++j)
        total += BigInt(parity_sign(j)) * BigInt(n - j) * binomial(n + 1, j);
    return total;
}

BigInt derivative_sum(long long n) {
    if (n < 1)
        throw MathRefusal("f is defined for n >= 1");
    BigInt total = 0;
    for (long long j = 0; j <= n; ++j)
        total += BigInt(parity_sign(j)) * BigInt(n + 1 - j) * binomial(n + 1, j);
    return total;
}

BigInt f_value_alt(long long n) {
    // f(n) = S(n) - sum_{j=0}^{n} (-1)^j C(n+1, j)
    BigInt truncated_alternating = 0;
    for (long long j = 0; j <= n; ++j)
        truncated_alternating += BigInt(parity_sign(j)) * binomial(n + 1, j);
    return derivative_sum(n) - truncated_alternating;
}

bool reduction_check(std::span<const Exponent> exponents) {
    if (exponents.size() < 3)
        throw MathRefusal("dimension below 3 not modeled");
    if (!pairwise_coprime(exponents))
        throw MathRefusal("reduction check requires pairwise coprime exponents");
    if (unit_fraction_sum(exponents) <= 1)
        throw MathRefusal("reduction check requires reciprocal sum above 1");

    const BigInt lhs = mec_numerator(exponents);
    const BigInt rhs = principal_maslov_symmetric(exponents) / 2; // e_n - e_{n+1}
    BigInt product = 1;
    for (Exponent a : exponents)
        product *= BigInt(a - 1);
    return (lhs == rhs) == (product == 0);
}

UnitFractionCheck unit_fraction_sum_check(std::span<const Exponent> exponents) {
    UnitFractionCheck check;
    check.sum = unit_fraction_sum(exponents);
    check.equals_one = (check.sum == 1);
    if (check.equals_one) {
        BigInt rest = 1;
        for (std::size_t j = 1; j < exponents.size(); ++j)
            rest *= exponents[j];
        // 1/a_0 = 1 - sum_{j>0} 1/a_j forces a_0 | a_1...a_n
        check.divisibility_witness = std::make_pair(exponents[0], rest);
    }
    return check;
}

std::vector<IdentityReport> run_identity_sweeps(long long f_max, Exponent tuple_max,
                                                int n) {
    if (f_max < 1 || tuple_max < 1 || n < 2)
        throw MathRefusal("sweep bounds must cover at least one case");

    std::vector<IdentityReport> reports;

    {
        IdentityReport r;
        r.name = "alternating-binomial-f";
        r.range = "1 <= n <= " + std::to_string(f_max) + ", both evaluation routes";
        r.passed = true;
        for (long long k = 1; k <= f_max; ++k) {
            const BigInt expected = parity_sign(k + 1);
            if (f_value(k) != expected || f_value_alt(k) != expected ||
                derivative_sum(k) != 0) {
                r.passed = false;
                r.counterexample = "n = " + std::to_string(k);
                break;
            }
        }
        reports.push_back(std::move(r));
    }

    {
        IdentityReport r;
        r.name = "symmetric-reduction";
        r.range = "pairwise coprime tuples, length " + std::to_string(n + 1) +
                  ", entries <= " + std::to_string(tuple_max) + ", reciprocal sum > 1";
        r.passed = true;
        for_each_coprime_tuple(n + 1, 1, tuple_max, 0,
                               [&](std::span<const Exponent> tuple) {
                                   if (unit_fraction_sum(tuple) <= 1)
                                       return true;
                                   if (!reduction_check(tuple)) {
                                       r.passed = false;
                                       r.counterexample = tuple_string(tuple);
                                       return false;
                                   }
                                   return true;
                               });
        reports.push_back(std::move(r));
    }

    {
        IdentityReport r;
        r.name = "coprime-reciprocal-sum";
        r.range = "pairwise coprime tuples, length " + std::to_string(n + 1) +
                  ", entries <= " + std::to_string(tuple_max);
        r.passed = true;
        for_each_coprime_tuple(n + 1, 1, tuple_max, 0,
                               [&](std::span<const Exponent> tuple) {
                                   if (unit_fraction_sum_check(tuple).equals_one) {
                                       r.passed = false;
                                       r.counterexample = tuple_string(tuple);
                                       return false;
                                   }
                                   return true;
                               });
        // the witness path must fire on the classic non-coprime solution
        if (r.passed) {
            const Exponents egyptian{2, 3, 6};
            const UnitFractionCheck check = unit_fraction_sum_check(egyptian);
            if (!check.equals_one || !check.divisibility_witness ||
                check.divisibility_witness->first != 2 ||
                check.divisibility_witness->second != 18 ||
                check.divisibility_witness->second % check.divisibility_witness->first != 0) {
                r.passed = false;
                r.counterexample = "(2,3,6) witness did not fire";
            }
        }
        reports.push_back(std::move(r));
    }

    return reports;
}

} // namespace bmec
