#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bmec/exact_arith.hpp"
#include "bmec/orbit_model.hpp"

namespace bmec {

/*
 * Mean Euler characteristic of an S^1-orbibundle contact manifold with
 * finitely many orbit spaces and no bad orbits:
 *
 *               sum_i (-1)^{mu(S_{T_i}) - dim(S_{T_i})/2} phi_i chi^{S^1}(N_{T_i})
 *     chi_m  =  ----------------------------------------------------------------
 *                                       |mu_P|
 *
 * where mu_P is the Maslov index of a principal orbit. Only the PARITY of
 * the stratum degree enters, encoded as degree_sign; full integer degrees
 * are required only for rendering E^2-pages, and must be supplied by the
 * caller. Bad orbits contribute nothing (their twisted homology is
 * trivial) and are represented by omission.
 */
struct MecStratum {
    BigInt period;                 // positive; divides the principal period
    int degree_sign = 1;           // +1 or -1: (-1)^{mu(S_T) - dim(S_T)/2}
    long long equivariant_euler = 0;
    BigInt multiplicity;           // positive
};

struct MecInput {
    std::vector<MecStratum> strata;
    BigInt principal_maslov;       // nonzero
};

// Refuses when mu_P = 0: the mean Euler characteristic is undefined there.
Rational mec_orbibundle(const MecInput& input);

// JSON ingestion for non-Brieskorn orbibundle data; see the README for the
// schema. Malformed documents raise std::invalid_argument, violations of
// the MecInput invariants raise MathRefusal.
MecInput parse_mec_input_json(const std::string& text);

// Good-orbit generator counts per Conley-Zehnder degree. A finite table of
// observed counts, optionally extended upward by periodicity: for degrees
// >= onset the count repeats with the given period (the fundamental window
// [onset, onset + period) must be stored in the table). This is the shape
// produced by an index-positive Morse-Bott contact form, whose E^2-page
// repeats every |mu_P| degrees.
struct Periodicity {
    long long onset = 0;
    long long period = 0; // positive
};

struct IndexCountSequence {
    std::map<long long, long long> counts;
    std::optional<Periodicity> tail;
};

long long count_at(const IndexCountSequence& counts, long long degree);

// (1/N) sum_{i=-N}^{N} (-1)^i count(i), exactly.
Rational mec_partial_sum(const IndexCountSequence& counts, long long n_limit);

// Max count over [lo, hi], plus whether the declared periodicity (or an
// all-zero window) certifies a uniform global bound.
struct BoundednessReport {
    bool bounded = false;
    long long bound = 0;
};
BoundednessReport boundedness_check(const IndexCountSequence& counts,
                                    long long lo, long long hi);

// A cover is bad when its Conley-Zehnder index differs from the index of
// the underlying orbit by an odd number.
bool is_bad_orbit(long long mu_cover, long long mu_underlying);

/*
 * E^2-page of the Morse-Bott spectral sequence, rational coefficients.
 * Each stratum record (a rational homology sphere of odd dimension d with
 * an explicit integer degree q0) contributes its multiplicity at fiber
 * rows p = 0, 2, ..., d-1 in every column q = q0 + k|mu_P|; the page is
 * periodic in the q-direction by construction. Columns below the onset of
 * an index-definite form are a formal extension of the physical page.
 */
struct E2Stratum {
    long long degree = 0;   // mu(S_T) - dim(S_T)/2, integer
    int manifold_dim = 0;   // odd
    BigInt multiplicity;    // nonnegative; zero contributes nothing
};

using E2Page = std::map<std::pair<long long, int>, BigInt>;

E2Page e2_page_dims(std::span<const E2Stratum> strata, long long q_lo,
                    long long q_hi, const BigInt& principal_maslov);

// Attach a caller-supplied integer degree to an enumerated stratum.
// Refuses when no degree is given ("degree data required") or when its
// parity contradicts the stratum's known degree parity.
E2Stratum with_degree(const OrbitSpace& stratum, std::optional<long long> degree);

} // namespace bmec
