#pragma once

// Slow, obviously-correct reference implementations used by the tests.
// Nothing here shares code with the library.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint64_t ipow(std::uint64_t a, unsigned k) {
    std::uint64_t r = 1;
    while (k--) r *= a;
    return r;
}

// Can n be written as j positive k-th powers with every base <= max_base?
inline bool representable(std::uint64_t n, unsigned j, unsigned k, std::uint64_t max_base) {
    if (j == 0) return n == 0;
    if (n < j) return false;
    for (std::uint64_t a = max_base; a >= 1; --a) {
        std::uint64_t p = ipow(a, k);
        if (p > n) continue;
        if (j * p < n) break;  // remaining parts are <= p each
        if (representable(n - p, j - 1, k, a)) return true;
    }
    return false;
}

inline bool representable(std::uint64_t n, unsigned j, unsigned k) {
    std::uint64_t a = 1;
    while (ipow(a + 1, k) <= n) ++a;
    return representable(n, j, k, a);
}

// Number of multisets of j positive k-th powers (bases <= max_base) summing to n.
inline std::uint64_t count_multisets(std::uint64_t n, unsigned j, unsigned k, std::uint64_t max_base) {
    if (j == 0) return n == 0;
    if (n < j) return 0;
    std::uint64_t c = 0;
    for (std::uint64_t a = max_base; a >= 1; --a) {
        std::uint64_t p = ipow(a, k);
        if (p > n) continue;
        if (j * p < n) break;
        c += count_multisets(n - p, j - 1, k, a);
    }
    return c;
}

inline std::uint64_t count_multisets(std::uint64_t n, unsigned j, unsigned k) {
    std::uint64_t a = 1;
    while (ipow(a + 1, k) <= n) ++a;
    return count_multisets(n, j, k, a);
}

// Partitions of n into parts <= max_part.
inline std::uint64_t partitions(std::uint64_t n, std::uint64_t max_part) {
    if (n == 0) return 1;
    std::uint64_t c = 0;
    for (std::uint64_t p = std::min(n, max_part); p >= 1; --p) c += partitions(n - p, p);
    return c;
}

// Partitions of n into exactly j parts, each <= max_part.
inline std::uint64_t partitions_exact(std::uint64_t n, std::uint64_t j, std::uint64_t max_part) {
    if (j == 0) return n == 0;
    if (n < j) return 0;
    std::uint64_t c = 0;
    for (std::uint64_t p = std::min(n, max_part); p >= 1; --p) c += partitions_exact(n - p, j - 1, p);
    return c;
}

// Volume of {x in [0,1]^j : sum x_i^k <= 1} = Gamma(1+1/k)^j / Gamma(1+j/k).
inline double volume_closed_form(unsigned j, unsigned k) {
    return std::exp(j * std::lgamma(1.0 + 1.0 / k) - std::lgamma(1.0 + static_cast<double>(j) / k));
}

// Complement below limit of "sum of at most jmax positive k-th powers", by direct enumeration.
inline std::vector<std::uint64_t> not_sum_of_at_most(unsigned k, unsigned jmax, std::uint64_t limit) {
    std::vector<unsigned> best(limit, jmax + 1);  // fewest parts needed
    best[0] = 0;
    for (std::uint64_t n = 1; n < limit; ++n)
        for (std::uint64_t a = 1; ipow(a, k) <= n; ++a) {
            unsigned c = best[n - ipow(a, k)] + 1;
            if (c < best[n]) best[n] = c;
        }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n < limit; ++n)
        if (best[n] > jmax) out.push_back(n);
    return out;
}

}  // namespace oracle
