#pragma once

#include <cstdint>
#include <stdexcept>

namespace qgirth {

// Quaternion coordinates must be bit-exact: a silent wraparound would
// corrupt factorizations, so every coordinate operation goes through
// these and throws instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("qgirth: 64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("qgirth: 64-bit overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("qgirth: 64-bit overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN)
        throw std::overflow_error("qgirth: 64-bit overflow in negation");
    return -a;
}

} // namespace qgirth
