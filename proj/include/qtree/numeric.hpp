#ifndef QTREE_NUMERIC_HPP
#define QTREE_NUMERIC_HPP

#include <bit>
#include <cstdint>
#include <optional>

namespace qtree {

// Smallest n with 2^n >= v, clamped to at least 1 (a one-symbol alphabet
// still occupies one bit).
inline int ceil_log2(std::uint64_t v) {
    if (v <= 2) return 1;
    return std::bit_width(v - 1);
}

// base^exp in 64-bit, or nullopt on overflow.
inline std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

} // namespace qtree

#endif
