#include "waring/arith.hpp"

namespace waring {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

bool pow_at_most(std::uint64_t base, unsigned exp, std::uint64_t cap, std::uint64_t* out) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r) || r > cap) return false;
    }
    if (out) *out = r;
    return true;
}

std::uint64_t iroot_floor(std::uint64_t n, unsigned k) {
    if (k == 0) throw PreconditionError("iroot_floor: k must be >= 1");
    if (k == 1 || n < 2) return n;
    std::uint64_t lo = 1, hi = std::uint64_t{1} << (64 / k + 1);
    // invariant: lo^k <= n < hi^k
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow_at_most(mid, k, n)) lo = mid;
        else hi = mid;
    }
    return lo;
}

namespace {

// r^k * den compared against num, all in 128 bits; saturates on overflow.
bool scaled_pow_at_most(std::uint64_t r, unsigned k, std::uint64_t den, unsigned __int128 num) {
    if (r == 0) return true;
    unsigned __int128 acc = den;
    for (unsigned i = 0; i < k; ++i) {
        if (acc > num / r) return false;  // acc * r > num
        acc *= r;
    }
    return acc <= num;
}

}  // namespace

std::uint64_t iroot_floor_ratio(unsigned __int128 num, std::uint64_t den, unsigned k) {
    if (den == 0 || k == 0) throw PreconditionError("iroot_floor_ratio: den and k must be positive");
    std::uint64_t lo = 0, hi = std::uint64_t{1} << (64 / k + 1);
    if (k == 1) hi = std::numeric_limits<std::uint64_t>::max();
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (scaled_pow_at_most(mid, k, den, num)) lo = mid;
        else hi = mid;
    }
    return lo;
}

std::uint64_t iroot_ceil_ratio(std::uint64_t num, std::uint64_t den, unsigned k) {
    if (num == 0) return 0;
    std::uint64_t r = iroot_floor_ratio(num, den, k);
    bool exact = !scaled_pow_at_most(r, k, den, static_cast<unsigned __int128>(num) - 1);
    return exact ? r : r + 1;
}

bool is_perfect_power(std::uint64_t n, unsigned k) {
    std::uint64_t r = iroot_floor(n, k);
    std::uint64_t p;
    return pow_at_most(r, k, n, &p) && p == n;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace waring
