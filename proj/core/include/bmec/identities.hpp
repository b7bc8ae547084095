#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bmec/exact_arith.hpp"

namespace bmec {

// f(n) = sum_{j=0}^{n} (-1)^j (n-j) C(n+1, j); equals (-1)^{n+1}.
BigInt f_value(long long n);

// Second evaluation route: 0 = d/dx (x-1)^{n+1} at x = 1 expands to
// S(n) = sum_{j=0}^{n} (-1)^j (n+1-j) C(n+1, j), and subtracting the
// truncated alternating binomial sum recovers f(n).
BigInt derivative_sum(long long n);
BigInt f_value_alt(long long n);

// Equivalence behind the characterization chi_m = (-1)^{n+1}/2:
//     sum_{j=0}^{n-1} (n-j) e_j(a-1)  =  e_n(a) - e_{n+1}(a)
// holds if and only if prod_j (a_j - 1) = 0. Tests the two predicates
// pointwise over exact integers; a false return is a discovered
// inconsistency. Requires pairwise coprime exponents with reciprocal
// sum above 1.
bool reduction_check(std::span<const Exponent> exponents);

// sum_j 1/a_j with an exactness certificate: when the sum equals 1, the
// divisor a_0 | a_1 ... a_n is emitted, exhibiting the coprimality
// violation (pairwise coprime exponents never sum to 1).
struct UnitFractionCheck {
    Rational sum;
    bool equals_one = false;
    // (a_0, a_1 * ... * a_n) with a_0 dividing the product
    std::optional<std::pair<Exponent, BigInt>> divisibility_witness;
};

UnitFractionCheck unit_fraction_sum_check(std::span<const Exponent> exponents);

struct IdentityReport {
    std::string name;
    std::string range;
    bool passed = false;
    std::string counterexample; // empty unless failed
};

// The three sweeps behind the `identities` command: the alternating
// binomial identity (both routes), the symmetric reduction over coprime
// tuples, and the coprime reciprocal-sum exclusion.
std::vector<IdentityReport> run_identity_sweeps(long long f_max, Exponent tuple_max,
                                                int n);

} // namespace bmec
