#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "bmec/exact_arith.hpp"
#include "bmec/mec_engine.hpp"
#include "bmec/orbit_model.hpp"

namespace bmec {

// Topological profile of the Brieskorn manifold Sigma(a_0,...,a_n): the
// link of sum_i z_i^{a_i} = 0, a (2n-1)-dimensional contact manifold.
struct BrieskornExponents {
    Exponents exponents;
    int n = 0;           // exponent count minus one
    int dimension = 0;   // 2n - 1
    bool pairwise_coprime = false;
    bool has_unit_exponent = false;
    // Pairwise coprime exponents give an integral homology sphere; with
    // n > 2 the manifold is moreover homeomorphic to S^{2n-1}. An exponent
    // equal to 1 makes it contactomorphic to the standard sphere.
    bool integral_homology_sphere = false;
    bool homeomorphic_to_sphere = false;
};

BrieskornExponents validate(std::span<const Exponent> exponents);

enum class IndexSign { positive, negative };
const char* index_sign_name(IndexSign sign);

/*
 * Principal Maslov index:
 *
 *     mu_P = 2 lcm_i(a_i) (sum_j 1/a_j - 1),
 *
 * always an even integer (returned as an exact rational). For pairwise
 * coprime exponents lcm = prod, and the value collapses to the symmetric
 * form 2 (e_n(a) - e_{n+1}(a)).
 */
Rational principal_maslov(std::span<const Exponent> exponents);
BigInt principal_maslov_symmetric(std::span<const Exponent> exponents);

// Index-positive iff sum_j 1/a_j > 1, index-negative iff < 1; the sign is
// the sign of mu_P. Refuses when the sum equals 1 (mu_P = 0).
IndexSign index_sign(std::span<const Exponent> exponents);

// Numerator of the closed-form mean Euler characteristic:
// sum_{j=0}^{n-1} (n-j) e_j(a_0 - 1, ..., a_n - 1).
BigInt mec_numerator(std::span<const Exponent> exponents);

/*
 * Mean Euler characteristic of (Sigma(a), alpha) by three independent
 * routes, proved (and offered) for pairwise coprime exponents only:
 *
 *   closed form    (-1)^{n+1} [sum_{j<n} (n-j) e_j(a-1)] / (2 |e_n - e_{n+1}|)
 *   brute force    (-1)^{n+1} [sum_{t=1}^{prod a} max(0, |J(t)|-1)] / (2 |e_n - e_{n+1}|)
 *   orbibundle     enumerate strata, feed the general engine
 *
 * The three must agree as exact rationals.
 */
Rational mec_closed_form(std::span<const Exponent> exponents);
Rational mec_bruteforce(std::span<const Exponent> exponents,
                        std::int64_t oracle_cap = 10'000'000);
Rational mec_via_engine(std::span<const Exponent> exponents);

// The MecInput the engine route feeds to mec_orbibundle: one stratum per
// support set with nonzero multiplicity, degree sign (-1)^{n+1}, Euler
// characteristic |I| - 1, and mu_P in the symmetric form.
MecInput brieskorn_mec_input(std::span<const Exponent> exponents);

// Synthetic good-orbit degree counts for an index-positive Brieskorn
// manifold: per |mu_P|-window the total generator count sum_I phi_I
// chi^{S^1}(N_I), placed at the window offset matching the parity of n+1.
// Placement inside the window is a normalization; only window totals and
// parity are meaningful (the literature gives the parity of exceptional
// stratum degrees, not their values).
IndexCountSequence brieskorn_index_counts(std::span<const Exponent> exponents);

// Everything the reporting layer needs about one exponent tuple.
struct BrieskornInvariants {
    Rational mu_p;                             // lcm form, always defined
    std::optional<BigInt> mu_p_symmetric;      // coprime inputs only
    Rational unit_fraction_sum;
    std::optional<IndexSign> index_sign;       // absent when mu_P = 0
    std::optional<Rational> mec;               // closed form; coprime only
    std::vector<OrbitSpace> orbit_spaces;      // coprime only
};

BrieskornInvariants compute_invariants(const BrieskornExponents& profile);

} // namespace bmec
