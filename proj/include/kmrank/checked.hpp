#pragma once

#include <cstdint>

#include "kmrank/error.hpp"

namespace kmrank {

// Exact counts never wrap: every add/mul on a coefficient goes through here.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::ArithmeticOverflow, "integer overflow in addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) fail(ErrorCode::ArithmeticOverflow, "integer overflow in subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::ArithmeticOverflow, "integer overflow in multiplication");
    return out;
}

}  // namespace kmrank
