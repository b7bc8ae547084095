#include "bmec/obstruction.hpp"

#include <algorithm>
#include <numeric>

namespace bmec {

namespace {

constexpr const char* kDimensionCitation =
    "three-dimensional nontrivial Brieskorn spheres are not simply connected, and "
    "Reeb orbits can become contractible in the filling, so the boundary alone does "
    "not determine the filling's mean Euler characteristic; the obstruction needs "
    "dimension at least 5";

constexpr const char* kCoprimalityCitation =
    "pairwise coprime exponents make the Brieskorn manifold an integral homology "
    "sphere; without coprimality the homology-sphere hypothesis is unavailable";

constexpr const char* kUnitExponentCitation =
    "with some exponent equal to 1 the Brieskorn manifold is contactomorphic to the "
    "standard contact sphere, which bounds a displaceable ball; the obstruction "
    "vanishes";

constexpr const char* kIndexSignCitation =
    "the contact form is index-positive when sum_j 1/a_j > 1 and index-negative when "
    "sum_j 1/a_j < 1; a displaceable exact contact embedding of an index-definite "
    "simply-connected contact manifold forces index-positivity";

constexpr const char* kMecCitation =
    "a rational homology sphere admitting a displaceable exact contact embedding into "
    "a convex exact manifold with c_1 vanishing on pi_2 has a filling whose mean Euler "
    "characteristic equals (-1)^(n+1)/2 exactly, and in particular is a half-integer";

void require_positive_exponents(std::span<const Exponent> exponents) {
    if (exponents.empty())
        throw MathRefusal("empty sequence");
    for (Exponent a : exponents)
        if (a < 1)
            throw MathRefusal("values must be positive");
}

} // namespace

const char* label_name(VerdictLabel label) {
    switch (label) {
    case VerdictLabel::obstructed_index_negative: return "obstructed_index_negative";
    case VerdictLabel::obstructed_mec_mismatch: return "obstructed_mec_mismatch";
    case VerdictLabel::unobstructed_standard_sphere: return "unobstructed_standard_sphere";
    case VerdictLabel::out_of_theorem_scope: return "out_of_theorem_scope";
    case VerdictLabel::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Rational expected_filling_mec(int n, long long relative_euler) {
    return make_rational(BigInt(parity_sign(n + 1)) * relative_euler, 2);
}

FillingExpectation filling_profile_of_homology_sphere(int n) {
    if (n < 2)
        throw MathRefusal("filling profile defined for n >= 2");
    FillingExpectation f;
    f.n = n;
    f.relative_homology[2 * n] = 1;
    f.relative_euler = 1;
    f.expected_mec = expected_filling_mec(n, 1);
    return f;
}

IndexInterval cz_bounds(const Rational& mean_index, int n, long long iterate) {
    if (iterate < 1)
        throw MathRefusal("iterate must be positive");
    if (n < 1)
        throw MathRefusal("ambient half-dimension must be positive");
    const Rational center = Rational(iterate) * mean_index;
    const Rational error = n - 1;
    return IndexInterval{floor_rat(center - error), ceil_rat(center + error)};
}

bool index_negative_contradiction(int n, std::span<const Rational> mean_indices) {
    if (mean_indices.empty())
        throw MathRefusal("empty sequence");
    for (const Rational& delta : mean_indices)
        if (delta >= 0)
            throw MathRefusal("mean indices must be negative");
    // N delta + (n-1) decreases in N for delta < 0, so N = 1 is the sup.
    Rational sup = mean_indices[0];
    for (const Rational& delta : mean_indices)
        sup = std::max(sup, delta);
    sup += n - 1;
    return ceil_rat(sup) < n + 1;
}

Verdict classify_displaceability(std::span<const Exponent> exponents) {
    require_positive_exponents(exponents);

    Verdict v;
    v.input.assign(exponents.begin(), exponents.end());
    const long long n = static_cast<long long>(exponents.size()) - 1;

    // (1) dimension gate: the theorem needs n > 2, i.e. at least four exponents
    {
        Reason r;
        r.rule = "dimension";
        r.citation = kDimensionCitation;
        r.values.emplace_back("n", Rational(n));
        r.values.emplace_back("dimension", Rational(2 * n - 1));
        if (exponents.size() < 4) {
            r.notes.push_back("fired: fewer than four exponents");
            if (exponents.size() == 3 && pairwise_coprime(exponents)) {
                // informational only; the verdict abstains in dimension 3
                r.values.emplace_back("chi_m", mec_closed_form(exponents));
            }
            v.reasons.push_back(std::move(r));
            v.label = VerdictLabel::out_of_theorem_scope;
            return v;
        }
        r.notes.push_back("passed: n > 2");
        v.reasons.push_back(std::move(r));
    }

    // (2) coprimality gate
    {
        Reason r;
        r.rule = "coprimality";
        r.citation = kCoprimalityCitation;
        if (!pairwise_coprime(exponents)) {
            for (std::size_t i = 0; i < exponents.size() && r.values.empty(); ++i) {
                for (std::size_t j = i + 1; j < exponents.size(); ++j) {
                    const Exponent g = std::gcd(exponents[i], exponents[j]);
                    if (g != 1) {
                        r.values.emplace_back("offending_gcd", Rational(g));
                        r.notes.push_back("fired: gcd(a_" + std::to_string(i) + ", a_" +
                                          std::to_string(j) + ") = " + std::to_string(g));
                        break;
                    }
                }
            }
            v.reasons.push_back(std::move(r));
            v.label = VerdictLabel::out_of_theorem_scope;
            return v;
        }
        r.notes.push_back("passed: exponents pairwise coprime");
        v.reasons.push_back(std::move(r));
    }

    // (3) unit exponent: the standard sphere, obstruction vacuous
    {
        Reason r;
        r.rule = "unit-exponent";
        r.citation = kUnitExponentCitation;
        const bool unit = std::any_of(exponents.begin(), exponents.end(),
                                      [](Exponent a) { return a == 1; });
        if (unit) {
            r.values.emplace_back("chi_m", mec_closed_form(exponents));
            r.values.emplace_back("expected_filling_mec",
                                  expected_filling_mec(static_cast<int>(n), 1));
            r.notes.push_back("fired: some exponent equals 1");
            v.reasons.push_back(std::move(r));
            v.label = VerdictLabel::unobstructed_standard_sphere;
            return v;
        }
        r.notes.push_back("passed: all exponents at least 2");
        v.reasons.push_back(std::move(r));
    }

    // (4) index sign from the reciprocal sum
    const Rational sum = unit_fraction_sum(exponents);
    {
        Reason r;
        r.rule = "index-sign";
        r.citation = kIndexSignCitation;
        r.values.emplace_back("reciprocal_sum", sum);
        r.values.emplace_back("mu_p", principal_maslov(exponents));
        if (sum < 1) {
            r.notes.push_back("fired: index-negative");
            v.reasons.push_back(std::move(r));
            v.label = VerdictLabel::obstructed_index_negative;
            return v;
        }
        if (sum == 1) {
            // unreachable for pairwise coprime exponents
            r.notes.push_back("fired: reciprocal sum equals 1, index sign undefined");
            v.reasons.push_back(std::move(r));
            v.label = VerdictLabel::indeterminate;
            return v;
        }
        r.notes.push_back("passed: index-positive");
        v.reasons.push_back(std::move(r));
    }

    // (5) mean Euler characteristic against the forced value
    {
        Reason r;
        r.rule = "mec-comparison";
        r.citation = kMecCitation;
        const Rational chi = mec_closed_form(exponents);
        const Rational expected = expected_filling_mec(static_cast<int>(n), 1);
        r.values.emplace_back("chi_m", chi);
        r.values.emplace_back("expected_filling_mec", expected);
        r.notes.push_back(is_half_integer(chi) ? "chi_m is a half-integer"
                                               : "chi_m is not a half-integer");
        if (chi != expected) {
            r.notes.push_back("fired: chi_m differs from the forced filling value");
            v.reasons.push_back(std::move(r));
            v.label = VerdictLabel::obstructed_mec_mismatch;
            return v;
        }
        // chi_m = (-1)^(n+1)/2 without a unit exponent: outside the
        // classified range (it does not occur for coprime exponents).
        r.notes.push_back("chi_m matches the forced value with no unit exponent");
        v.reasons.push_back(std::move(r));
        v.label = VerdictLabel::indeterminate;
        return v;
    }
}

} // namespace bmec
