#pragma once

#include <cstdint>

#include "torusband/errors.hpp"

namespace torusband {

// All parameter arithmetic is exact 64-bit with overflow checks that fail
// loudly; silent wraparound would corrupt the number theory invisibly.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

}  // namespace torusband
