#pragma once

#include <cstdint>
#include <vector>

namespace waring {

// p(n)
std::uint64_t count_partitions(std::uint64_t n);

// p(n, j): partitions of n into exactly j parts.
std::uint64_t count_partitions_into_parts(std::uint64_t n, std::uint64_t j);

// p^k(n): partitions of n into positive k-th powers.
std::uint64_t count_power_partitions(std::uint64_t n, unsigned k);

// p^k(n, j): partitions of n into exactly j positive k-th powers.
std::uint64_t count_power_partitions_into_parts(std::uint64_t n, std::uint64_t j, unsigned k);

// Dense table of p^k(n, j) for n <= max_n, j <= max_j, built once and reused.
// Parts are added in ascending order as an unbounded knapsack with a part-count
// dimension; all additions are overflow-checked.
class PowerPartitionTable {
public:
    PowerPartitionTable(unsigned k, std::uint64_t max_n, std::uint64_t max_j);

    unsigned k() const noexcept { return k_; }
    std::uint64_t max_n() const noexcept { return max_n_; }
    std::uint64_t max_j() const noexcept { return max_j_; }

    std::uint64_t count(std::uint64_t n, std::uint64_t j) const;

private:
    unsigned k_;
    std::uint64_t max_n_;
    std::uint64_t max_j_;
    std::vector<std::uint64_t> table_;  // [j][n]
};

struct ShiftIdentityViolation {
    unsigned k;
    std::uint64_t n;
    std::uint64_t j;
    std::uint64_t lhs;  // p^k(n, j)
    std::uint64_t rhs;  // p^k(n+1, j+1)
    bool equality_expected;
};

// p^k(n,j) <= p^k(n+1,j+1) with equality whenever n < 2^k j, swept over
// 2 <= n <= max_n, 2 <= j <= max_j. Returns every violation found.
std::vector<ShiftIdentityViolation> check_shift_identity(unsigned k, std::uint64_t max_n, std::uint64_t max_j);

}  // namespace waring
