#pragma once

#include <cstdint>
#include <stdexcept>

namespace a1weyl {

using Int = std::int64_t;

// All coordinate arithmetic funnels through these. Overflow throws instead
// of wrapping; desk-scale inputs never get close, but the guarantee is cheap.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

}  // namespace a1weyl
