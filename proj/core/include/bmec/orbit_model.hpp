#pragma once

#include <span>
#include <vector>

#include "bmec/exact_arith.hpp"

namespace bmec {

/*
 * Periodic-orbit structure of the Brieskorn Reeb flow
 *
 *     phi_t(z_0,...,z_n) = (e^{4it/a_0} z_0, ..., e^{4it/a_n} z_n).
 *
 * Time is measured in units of pi/2, so coordinate j returns after the
 * integer time a_j and the whole period lattice is integral. Only ratios
 * of periods enter any formula, so the unit drops out.
 *
 * A stratum is the set of points whose support (indices of nonvanishing
 * coordinates) is exactly I; it is itself a Brieskorn manifold on |I|
 * coordinates and closes up at time lcm{a_j : j in I}. Supports of size
 * 0 or 1 are geometrically empty: z^a = 0 forces z = 0 on a single
 * coordinate, so the variety meets no coordinate axis.
 */
struct OrbitSpace {
    std::vector<int> support;   // sorted coordinate indices, |support| >= 2
    BigInt period;              // lcm of the supporting exponents
    int manifold_dim = 0;       // 2|I| - 3
    int equivariant_euler = 0;  // chi^{S^1} = |I| - 1
    BigInt multiplicity;        // recurrences per principal period (phi)
    int degree_parity = 0;      // parity of mu(S_T) - dim(S_T)/2 = parity of n+1
};

// All strata, sorted by (period, lexicographic support). The multiplicity
// field is filled by the product formula; the full support appears with
// period prod a_j and multiplicity 1. Only pairwise coprime exponents are
// supported: the multiplicity formula is proved in that case alone.
std::vector<OrbitSpace> enumerate_orbit_spaces(std::span<const Exponent> exponents);

// phi_{T_i; larger periods} = #{ a >= 1 : a T_i < T_k, a T_i not a
// multiple of any listed larger period }. The inequality is strict, so
// the principal period itself is excluded from every count; the full
// orbit space is accounted for separately (it appears once).
BigInt phi_count(const BigInt& t_i, std::span<const BigInt> larger_periods,
                 const BigInt& t_k);

// Closed-form multiplicity: prod_{j not in support} (a_j - 1).
// Equals 1 for the full support (empty product).
BigInt phi_product_formula(std::span<const Exponent> exponents,
                           std::span<const int> support);

// chi of the S^1-equivariant homology of a rational homology sphere of
// odd dimension 2m+1 with a fixed-point free circle action: m + 1.
int equivariant_euler_of_sphere(int manifold_dim);

// J(t) = { j : a_j divides t }: support of the stratum periodic at time t
// (geometrically empty when |J(t)| <= 1).
std::vector<int> support_at_time(std::span<const Exponent> exponents,
                                 std::int64_t t);

} // namespace bmec
