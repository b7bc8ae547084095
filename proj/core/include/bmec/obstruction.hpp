#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bmec/brieskorn.hpp"
#include "bmec/exact_arith.hpp"

namespace bmec {

/*
 * Displaceability obstruction for Brieskorn manifolds.
 *
 * A displaceable exact contact embedding of an index-definite
 * (2n-1)-dimensional simply-connected contact manifold forces
 * index-positivity, and for a rational homology sphere it pins the mean
 * Euler characteristic of the filling to (-1)^{n+1}/2 exactly. A verdict
 * never claims that an embedding exists; "unobstructed" means the
 * obstruction vanishes because the manifold is the standard sphere.
 */
enum class VerdictLabel {
    obstructed_index_negative,
    obstructed_mec_mismatch,
    unobstructed_standard_sphere,
    out_of_theorem_scope,
    indeterminate,
};

const char* label_name(VerdictLabel label);

struct Reason {
    std::string rule;
    std::string citation;
    std::vector<std::pair<std::string, Rational>> values;
    std::vector<std::string> notes;
};

struct Verdict {
    VerdictLabel label = VerdictLabel::indeterminate;
    std::vector<Reason> reasons; // the decision chain, in evaluation order
    Exponents input;
};

// chi_m of the filling forced by a displaceable embedding:
// (-1)^{n+1} chi(W, Sigma) / 2.
Rational expected_filling_mec(int n, long long relative_euler);

// Relative homology of the filling of a simply-connected rational homology
// (2n-1)-sphere bounding a displaceable embedding: Q in degree 2n only.
struct FillingExpectation {
    int n = 0;
    std::map<int, long long> relative_homology; // degree -> Betti number
    long long relative_euler = 0;
    Rational expected_mec;
};

FillingExpectation filling_profile_of_homology_sphere(int n);

// Admissible Conley-Zehnder index range of the N-fold cover of an orbit
// with mean index delta: N delta +/- (n-1), endpoints rounded outward
// (the error bound is real-valued while the index is an integer).
struct IndexInterval {
    BigInt lo;
    BigInt hi;
};

IndexInterval cz_bounds(const Rational& mean_index, int n, long long iterate);

// With every mean index negative, N delta + (n-1) is maximal at N = 1 and
// stays below n+1, so the degree-(n+1) generator forced by the vanishing
// of symplectic homology is unreachable. Returns whether that ceiling is
// certified for the given orbits.
bool index_negative_contradiction(int n, std::span<const Rational> mean_indices);

// Full decision tree; every input receives a verdict (never throws on
// positive exponents).
Verdict classify_displaceability(std::span<const Exponent> exponents);

} // namespace bmec
