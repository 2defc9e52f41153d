#pragma once

// Existence-of-representation sieve: bit n of the (j,k) sieve is set iff n is
// a sum of exactly j positive k-th powers. Each step j -> j+1 ORs together
// copies of the previous bitmap shifted by every k-th power below the limit.

#include <cstdint>

#include "waring/core.hpp"

namespace waring {

inline constexpr std::uint64_t kDefaultRamCap = std::uint64_t{8} << 30;

struct SieveOptions {
    std::uint64_t ram_cap = kDefaultRamCap;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Throws ResourceError if `bitmaps` bitmaps of `limit` bits exceed 75% of the cap.
void check_memory_budget(std::uint64_t limit, unsigned bitmaps, const SieveOptions& opts);

class RepSieve {
public:
    RepSieve(unsigned k, unsigned j, std::uint64_t limit, Bitmap bits);

    unsigned k() const noexcept { return k_; }
    unsigned j() const noexcept { return j_; }
    std::uint64_t limit() const noexcept { return bits_.size(); }
    const Bitmap& bits() const noexcept { return bits_; }

    bool test(std::uint64_t n) const noexcept { return n < limit() && bits_.test(n); }

    friend bool operator==(const RepSieve&, const RepSieve&) = default;

private:
    unsigned k_;
    unsigned j_;
    Bitmap bits_;
};

RepSieve sieve_base(unsigned k, std::uint64_t limit, const SieveOptions& opts = {});

RepSieve advance(const RepSieve& prev, const SieveOptions& opts = {});

// Convenience: base sieve advanced to exactly j parts.
RepSieve sieve_exact(unsigned k, unsigned j, std::uint64_t limit, const SieveOptions& opts = {});

// Union over 1 <= j <= jmax. For n >= 1 this is also "sum of jmax nonnegative
// k-th powers". The result carries j = jmax.
RepSieve sieve_at_most(unsigned k, unsigned jmax, std::uint64_t limit, const SieveOptions& opts = {});

// All m with lower < m < upper are (j,k)-representable.
struct IntervalCertificate {
    unsigned k;
    unsigned j;
    std::uint64_t lower;
    std::uint64_t upper;
    std::uint64_t step = 0;  // a used by the last extension, 0 for a base certificate

    friend bool operator==(const IntervalCertificate&, const IntervalCertificate&) = default;
};

// Requires a^k - (a-1)^k < upper - lower; yields (j+1, lower+1, upper+a^k).
IntervalCertificate extend_interval(const IntervalCertificate& cert, std::uint64_t a);

// Every integer above the returned bound is (b+d, k)-representable, given an
// n* representable for d <= j < b+d and all n > n0 being sums of at most b powers.
std::uint64_t nstar_application_bound(std::uint64_t nstar, unsigned d, unsigned b, std::uint64_t n0);

}  // namespace waring
