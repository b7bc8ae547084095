#include "bmec/mec_engine.hpp"

#include <algorithm>
#include <cstdlib>

#include "json.hpp"

namespace bmec {

namespace {

void validate_mec_input(const MecInput& input) {
    if (input.principal_maslov == 0)
        throw MathRefusal("mean Euler characteristic undefined: mu_P = 0");
    if (input.strata.empty())
        return;
    BigInt principal_period = 0;
    for (const MecStratum& s : input.strata) {
        if (s.period < 1)
            throw MathRefusal("periods must be positive");
        if (s.degree_sign != 1 && s.degree_sign != -1)
            throw MathRefusal("degree sign must be +1 or -1");
        if (s.multiplicity < 1)
            throw MathRefusal("multiplicities must be positive");
        principal_period = std::max(principal_period, s.period);
    }
    for (const MecStratum& s : input.strata)
        if (principal_period % s.period != 0)
            throw MathRefusal("every period must divide the principal period");
}

BigInt bigint_from_json(const nlohmann::json& v, const char* what) {
    if (v.is_number_integer())
        return BigInt(v.get<std::int64_t>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            return BigInt(s);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("not an integer: ") + what);
        }
    }
    throw std::invalid_argument(std::string("expected integer or decimal string for ") + what);
}

} // namespace

Rational mec_orbibundle(const MecInput& input) {
    validate_mec_input(input);
    BigInt numerator = 0;
    for (const MecStratum& s : input.strata)
        numerator += BigInt(s.degree_sign) * s.multiplicity * BigInt(s.equivariant_euler);
    return make_rational(std::move(numerator),
                         boost::multiprecision::abs(input.principal_maslov));
}

MecInput parse_mec_input_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("principal_maslov") || !doc.contains("strata"))
        throw std::invalid_argument("expected an object with principal_maslov and strata");

    MecInput input;
    input.principal_maslov = bigint_from_json(doc["principal_maslov"], "principal_maslov");
    if (!doc["strata"].is_array())
        throw std::invalid_argument("strata must be an array");
    for (const auto& item : doc["strata"]) {
        if (!item.is_object())
            throw std::invalid_argument("each stratum must be an object");
        MecStratum s;
        s.period = bigint_from_json(item.at("period"), "period");
        s.degree_sign = static_cast<int>(item.at("degree_sign").get<std::int64_t>());
        s.equivariant_euler = item.at("equivariant_euler").get<std::int64_t>();
        s.multiplicity = bigint_from_json(item.at("multiplicity"), "multiplicity");
        input.strata.push_back(std::move(s));
    }
    validate_mec_input(input);
    return input;
}

long long count_at(const IndexCountSequence& counts, long long degree) {
    if (counts.tail) {
        if (counts.tail->period < 1)
            throw MathRefusal("periodicity requires a positive period");
        if (degree >= counts.tail->onset) {
            const long long p = counts.tail->period;
            degree = counts.tail->onset + (degree - counts.tail->onset) % p;
        }
    }
    const auto it = counts.counts.find(degree);
    return it == counts.counts.end() ? 0 : it->second;
}

Rational mec_partial_sum(const IndexCountSequence& counts, long long n_limit) {
    if (n_limit < 1)
        throw MathRefusal("limit must be positive");
    BigInt sum = 0;
    for (long long i = -n_limit; i <= n_limit; ++i) {
        const long long c = count_at(counts, i);
        if (c == 0)
            continue;
        sum += BigInt(parity_sign(std::llabs(i)) * c);
    }
    return make_rational(std::move(sum), BigInt(n_limit));
}

BoundednessReport boundedness_check(const IndexCountSequence& counts,
                                    long long lo, long long hi) {
    if (lo > hi)
        throw MathRefusal("empty degree window");
    BoundednessReport report;
    for (long long i = lo; i <= hi; ++i)
        report.bound = std::max(report.bound, count_at(counts, i));
    report.bounded = counts.tail.has_value() || report.bound == 0;
    return report;
}

bool is_bad_orbit(long long mu_cover, long long mu_underlying) {
    return (mu_cover - mu_underlying) % 2 != 0;
}

E2Page e2_page_dims(std::span<const E2Stratum> strata, long long q_lo,
                    long long q_hi, const BigInt& principal_maslov) {
    if (principal_maslov == 0)
        throw MathRefusal("mean Euler characteristic undefined: mu_P = 0");
    if (q_lo > q_hi)
        throw MathRefusal("empty degree window");
    const BigInt p = boost::multiprecision::abs(principal_maslov);

    E2Page page;
    for (const E2Stratum& s : strata) {
        if (s.manifold_dim < 1 || s.manifold_dim % 2 == 0)
            throw MathRefusal("strata must have odd positive dimension");
        if (s.multiplicity < 0)
            throw MathRefusal("multiplicities must be nonnegative");
        if (s.multiplicity == 0)
            continue;
        // first column >= q_lo congruent to the stratum degree mod |mu_P|
        BigInt r = (BigInt(s.degree) - q_lo) % p;
        if (r < 0)
            r += p;
        for (BigInt q = BigInt(q_lo) + r; q <= q_hi; q += p) {
            const auto col = static_cast<long long>(q);
            for (int fiber = 0; fiber <= s.manifold_dim - 1; fiber += 2)
                page[{col, fiber}] += s.multiplicity;
        }
    }
    return page;
}

E2Stratum with_degree(const OrbitSpace& stratum, std::optional<long long> degree) {
    if (!degree)
        throw MathRefusal("degree data required");
    const int parity = static_cast<int>(((*degree % 2) + 2) % 2);
    if (parity != stratum.degree_parity)
        throw MathRefusal("degree parity contradicts the stratum parity");
    return E2Stratum{*degree, stratum.manifold_dim, stratum.multiplicity};
}

} // namespace bmec
