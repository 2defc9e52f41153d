#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/sieve.hpp"

namespace waring {

// Sorted positive integers that are not (j,k)-representable below `limit`.
// j == 0 marks a stabilized set B^k (or a reduced tail, see reduce()).
struct BSet {
    unsigned k = 0;
    unsigned j = 0;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> elements;
    // true: proved complete by a stabilization verdict or a transcribed theorem;
    // false: empirical complement below `limit`.
    bool complete = false;

    bool empty() const noexcept { return elements.empty(); }
    std::size_t size() const noexcept { return elements.size(); }
    std::uint64_t max() const;
    bool contains(std::uint64_t n) const;
};

BSet extract_bset(const RepSieve& sieve);

// {n - j : n > j, n in B_j}.
std::vector<std::uint64_t> shifted_elements(const BSet& bset_j);

// The tail {n - j : n > j, n in B_j} \ base.
BSet reduce(const BSet& bset_j, const BSet& base);

struct ConsistencyVerdict {
    unsigned k;
    unsigned j;
    std::uint64_t m;          // max(B_j)
    bool condition1;          // B_{j+1} == {1} ∪ {n+1 : n in B_j}
    std::uint64_t floor_lhs;  // floor(((m-j) * 2^k/(2^k-1))^(1/k))
    std::uint64_t floor_rhs;  // floor(m^(1/k))
    bool condition2;
    bool stabilized;
};

// Throws InconclusiveError when either set's maximum lies within 2^k of its limit.
ConsistencyVerdict check_consistency(const BSet& bset_j, const BSet& bset_j1);

// {n-(j+1) : n > j+1, n in B_{j+1}} ⊆ {n-j : n > j, n in B_j}, compared on the
// window both sets cover after shifting.
bool check_chain_inclusion(const BSet& bset_j, const BSet& bset_j1);

// ceil(a / (2^k - 1)).
std::uint64_t stabilization_bound(std::uint64_t a_jk, unsigned k);

struct StabilizationResult {
    unsigned k;
    std::uint64_t limit;
    bool stabilized = false;
    std::optional<ConsistencyVerdict> verdict;  // at the stabilizing j
    unsigned j = 0;                             // last j examined (stabilizing j on success)
    BSet bset_j;                                // B_j at that j
    BSet base;                                  // candidate B^k, complete when stabilized
};

// Advances j = 1, 2, ... until check_consistency(B_j, B_{j+1}) stabilizes or j == jmax.
StabilizationResult stabilize(unsigned k, std::uint64_t limit, unsigned jmax, const SieveOptions& opts = {});

bool classify_four_squares(std::uint64_t n);

enum class ThreeSquares { obstruction_8m7, in_T_family, representable };

ThreeSquares classify_three_squares(std::uint64_t n);

bool three_cubes_obstruction(std::uint64_t n);

// p^(p-1) * (p-1)/2 for an odd prime p.
std::uint64_t fermat_lower_bound(std::uint64_t p);

struct BSetStats {
    unsigned k;
    std::uint64_t a;  // max(B^k)
    std::uint64_t b;  // |B^k|
    bool sizemax;     // a == 2b - 1
    bool reverse;     // n in B <=> a - n not in B, for 0 <= n <= a
    bool odd;         // a and b both odd
};

BSetStats bset_stats(const BSet& base);

}  // namespace waring
