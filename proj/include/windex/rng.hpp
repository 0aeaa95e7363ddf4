#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace windex {

// Deterministic seeded source. mt19937_64 output is fixed by the standard and
// bounded draws use masked rejection, so a given seed produces the same graphs
// on every platform and standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
        for (;;) {
            const std::uint64_t x = eng_() & mask;
            if (x < n) return x;
        }
    }

private:
    std::mt19937_64 eng_;
};

// Collapses several seed components into one stream seed (splitmix64 steps).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1) + 0xbf58476d1ce4e5b9ull * (c + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

}  // namespace windex
