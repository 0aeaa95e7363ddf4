#pragma once

#include <stdexcept>

namespace windex {

// Base for all recoverable errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed edge-list input: bad token, self-loop, duplicate edge, id over limit.
struct parse_error : error {
    using error::error;
};

// Input graph is not connected.
struct disconnected_error : error {
    using error::error;
};

// Connected but with more than one cycle (m > n); the stripping algorithms do not apply.
struct unsupported_class_error : error {
    using error::error;
};

// 64-bit index arithmetic would wrap.
struct overflow_error : error {
    using error::error;
};

}  // namespace windex
