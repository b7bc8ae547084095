#include "bmec/tuple_enum.hpp"

#include <numeric>
#include <vector>

namespace bmec {

namespace {

bool extend(Exponents& tuple, int remaining, Exponent min_next, Exponent max_value,
            std::int64_t product, std::int64_t product_cap,
            const std::function<bool(std::span<const Exponent>)>& visit) {
    if (remaining == 0)
        return visit(tuple);
    for (Exponent next = min_next; next <= max_value; ++next) {
        if (product_cap > 0 && product > product_cap / next)
            break; // products only grow along the nondecreasing tail
        bool coprime = true;
        for (Exponent prev : tuple) {
            if (std::gcd(prev, next) != 1) {
                coprime = false;
                break;
            }
        }
        if (!coprime)
            continue;
        tuple.push_back(next);
        const bool keep_going = extend(tuple, remaining - 1, next, max_value,
                                       product * next, product_cap, visit);
        tuple.pop_back();
        if (!keep_going)
            return false;
    }
    return true;
}

} // namespace

bool for_each_coprime_tuple(int length, Exponent min_value, Exponent max_value,
                            std::int64_t product_cap,
                            const std::function<bool(std::span<const Exponent>)>& visit) {
    if (length < 1)
        throw MathRefusal("tuple length must be positive");
    if (min_value < 1)
        throw MathRefusal("values must be positive");
    Exponents tuple;
    tuple.reserve(static_cast<std::size_t>(length));
    return extend(tuple, length, min_value, max_value, 1, product_cap, visit);
}

} // namespace bmec
