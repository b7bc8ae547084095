#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "bmec/exact_arith.hpp"

namespace bmec {

// Visits every nondecreasing pairwise-coprime tuple of the given length
// with entries in [min_value, max_value] and product at most product_cap
// (0 = no cap), in lexicographic order. The visitor returns false to stop
// early; the function returns false iff it was stopped.
bool for_each_coprime_tuple(int length, Exponent min_value, Exponent max_value,
                            std::int64_t product_cap,
                            const std::function<bool(std::span<const Exponent>)>& visit);

} // namespace bmec
