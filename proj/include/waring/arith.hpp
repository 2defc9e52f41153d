#pragma once

// Exact unsigned 64-bit helpers. Every operation that can wrap throws
// RangeError instead.

#include <cstdint>
#include <limits>

#include "waring/errors.hpp"

namespace waring {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw RangeError("u64 addition overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw RangeError("u64 multiplication overflow");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// base^exp, or nullopt-like sentinel: returns false when the result exceeds `cap`.
// Used inside root searches where overflow simply means "too big".
bool pow_at_most(std::uint64_t base, unsigned exp, std::uint64_t cap, std::uint64_t* out = nullptr);

// floor(n^(1/k)) by binary search on integers.
std::uint64_t iroot_floor(std::uint64_t n, unsigned k);

// smallest r with r^k * den >= num, i.e. ceil((num/den)^(1/k)).
std::uint64_t iroot_ceil_ratio(std::uint64_t num, std::uint64_t den, unsigned k);

// largest r with r^k * den <= num, i.e. floor((num/den)^(1/k)). 128-bit products.
std::uint64_t iroot_floor_ratio(unsigned __int128 num, std::uint64_t den, unsigned k);

bool is_perfect_power(std::uint64_t n, unsigned k);

bool is_prime(std::uint64_t n);

}  // namespace waring
