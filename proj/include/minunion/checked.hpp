#pragma once

#include <cstdint>
#include <string>

#include "minunion/errors.hpp"

namespace minunion {

// Set elements, shifts, and edge weights are 64-bit signed integers.
using Value = std::int64_t;

inline Value checked_add(Value a, Value b) {
    Value r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Value checked_sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow: " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline Value checked_mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline Value checked_neg(Value a) { return checked_sub(0, a); }

}  // namespace minunion
