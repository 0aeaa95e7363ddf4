#pragma once

#include <cstdint>

#include "windex/errors.hpp"

namespace windex {

// Index values are unsigned 64-bit. Every addition and multiplication that can
// grow is range-checked so an overflow surfaces as windex::overflow_error
// instead of a silent wrap.
using index_value = std::uint64_t;

inline index_value checked_add(index_value a, index_value b) {
    index_value r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("64-bit overflow in index addition");
    }
    return r;
}

inline index_value checked_mul(index_value a, index_value b) {
    index_value r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("64-bit overflow in index multiplication");
    }
    return r;
}

inline index_value checked_sub(index_value a, index_value b) {
    if (b > a) {
        throw overflow_error("underflow in index subtraction");
    }
    return a - b;
}

}  // namespace windex
