#include "bmec/orbit_model.hpp"

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

} // namespace

std::vector<OrbitSpace> enumerate_orbit_spaces(std::span<const Exponent> exponents) {
    if (exponents.size() < 3)
        throw MathRefusal("need at least three exponents");
    require_positive_exponents(exponents);
    if (!pairwise_coprime(exponents))
        throw MathRefusal("unsupported: period lattice requires pairwise coprime exponents");

    const int m = static_cast<int>(exponents.size()); // m = n + 1
    if (m > 30)
        throw BudgetExceeded("too many exponents to enumerate supports");
    const int parity = m % 2; // parity of n + 1

    std::vector<OrbitSpace> out;
    out.reserve((std::size_t(1) << m) - 1 - std::size_t(m));
    for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
        std::vector<int> support;
        for (int j = 0; j < m; ++j)
            if (mask & (1ul << j))
                support.push_back(j);
        if (support.size() < 2)
            continue;

        OrbitSpace s;
        s.period = 1;
        for (int j : support)
            s.period *= exponents[static_cast<std::size_t>(j)];
        s.manifold_dim = 2 * static_cast<int>(support.size()) - 3;
        s.equivariant_euler = static_cast<int>(support.size()) - 1;
        s.multiplicity = phi_product_formula(exponents, support);
        s.degree_parity = parity;
        s.support = std::move(support);
        out.push_back(std::move(s));
    }

    std::sort(out.begin(), out.end(), [](const OrbitSpace& a, const OrbitSpace& b) {
        if (a.period != b.period)
            return a.period < b.period;
        return a.support < b.support;
    });
    return out;
}

BigInt phi_count(const BigInt& t_i, std::span<const BigInt> larger_periods,
                 const BigInt& t_k) {
    if (t_i < 1 || t_k < 1)
        throw MathRefusal("periods must be positive");
    if (t_k % t_i != 0)
        throw MathRefusal("phi count requires T_i to divide T_k");
    for (const BigInt& t_j : larger_periods) {
        if (t_j <= t_i)
            throw MathRefusal("phi count requires listed periods to exceed T_i");
        if (t_k % t_j != 0)
            throw MathRefusal("phi count requires listed periods to divide T_k");
    }

    // fast path leaves headroom so t += ti cannot overflow
    const auto i64_max = BigInt(std::numeric_limits<std::int64_t>::max() / 2);
    if (t_k <= i64_max) {
        const auto ti = static_cast<std::int64_t>(t_i);
        const auto tk = static_cast<std::int64_t>(t_k);
        std::vector<std::int64_t> larger(larger_periods.size());
        for (std::size_t j = 0; j < larger_periods.size(); ++j)
            larger[j] = static_cast<std::int64_t>(larger_periods[j]);
        std::int64_t count = 0;
        for (std::int64_t t = ti; t < tk; t += ti) {
            bool absorbed = false;
            for (std::int64_t tj : larger) {
                if (t % tj == 0) {
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed)
                ++count;
        }
        return BigInt(count);
    }

    BigInt count = 0;
    for (BigInt t = t_i; t < t_k; t += t_i) {
        bool absorbed = false;
        for (const BigInt& t_j : larger_periods) {
            if (t % t_j == 0) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed)
            ++count;
    }
    return count;
}

BigInt phi_product_formula(std::span<const Exponent> exponents,
                           std::span<const int> support) {
    require_positive_exponents(exponents);
    if (!pairwise_coprime(exponents))
        throw MathRefusal("unsupported: period lattice requires pairwise coprime exponents");
    if (support.size() < 2)
        throw MathRefusal("support needs at least two coordinates");

    std::vector<bool> in_support(exponents.size(), false);
    for (int j : support) {
        if (j < 0 || static_cast<std::size_t>(j) >= exponents.size())
            throw MathRefusal("support index outside the exponent range");
        if (in_support[static_cast<std::size_t>(j)])
            throw MathRefusal("support indices must be distinct");
        in_support[static_cast<std::size_t>(j)] = true;
    }

    BigInt product = 1;
    for (std::size_t j = 0; j < exponents.size(); ++j)
        if (!in_support[j])
            product *= BigInt(exponents[j] - 1);
    return product;
}

int equivariant_euler_of_sphere(int manifold_dim) {
    if (manifold_dim < 1 || manifold_dim % 2 == 0)
        throw MathRefusal("equivariant Euler characteristic requires odd positive dimension");
    return (manifold_dim + 1) / 2;
}

std::vector<int> support_at_time(std::span<const Exponent> exponents, std::int64_t t) {
    require_positive_exponents(exponents);
    if (t < 1)
        throw MathRefusal("time must be positive");
    std::vector<int> support;
    for (std::size_t j = 0; j < exponents.size(); ++j)
        if (t % exponents[j] == 0)
            support.push_back(static_cast<int>(j));
    return support;
}

} // namespace bmec
