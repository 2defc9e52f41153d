#include "waring/partitions.hpp"

#include <algorithm>

#include "waring/arith.hpp"
#include "waring/core.hpp"
#include "waring/errors.hpp"

namespace waring {

std::uint64_t count_partitions(std::uint64_t n) {
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::uint64_t part = 1; part <= n; ++part)
        for (std::uint64_t s = part; s <= n; ++s) ways[s] = checked_add(ways[s], ways[s - part]);
    return ways[n];
}

std::uint64_t count_partitions_into_parts(std::uint64_t n, std::uint64_t j) {
    if (j < 1) throw PreconditionError("count_partitions_into_parts: j must be >= 1");
    if (j > n) return 0;
    // p(m, i) = p(m-1, i-1) + p(m-i, i)
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(j + 1, 0));
    t[0][0] = 1;
    for (std::uint64_t m = 1; m <= n; ++m)
        for (std::uint64_t i = 1; i <= std::min(m, j); ++i) t[m][i] = checked_add(t[m - 1][i - 1], t[m - i][i]);
    return t[n][j];
}

std::uint64_t count_power_partitions(std::uint64_t n, unsigned k) {
    if (k < 1) throw PreconditionError("count_power_partitions: k must be >= 1");
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    if (n == 0) return 1;
    const PowerTable table(k, n);
    for (auto p : table.powers())
        for (std::uint64_t s = p; s <= n; ++s) ways[s] = checked_add(ways[s], ways[s - p]);
    return ways[n];
}

std::uint64_t count_power_partitions_into_parts(std::uint64_t n, std::uint64_t j, unsigned k) {
    if (j < 1 || k < 1) throw PreconditionError("count_power_partitions_into_parts: j and k must be >= 1");
    if (j > n) return 0;
    return PowerPartitionTable(k, n, j).count(n, j);
}

PowerPartitionTable::PowerPartitionTable(unsigned k, std::uint64_t max_n, std::uint64_t max_j)
    : k_(k), max_n_(max_n), max_j_(max_j), table_((max_j + 1) * (max_n + 1), 0) {
    if (k < 1) throw PreconditionError("PowerPartitionTable: k must be >= 1");
    const std::uint64_t stride = max_n + 1;
    table_[0] = 1;
    if (max_n == 0) return;
    const PowerTable powers(k, max_n);
    for (auto p : powers.powers()) {
        // ascending s: table_[c-1][s-p] already counts uses of p itself
        for (std::uint64_t s = p; s <= max_n; ++s)
            for (std::uint64_t c = 1; c <= max_j; ++c)
                table_[c * stride + s] = checked_add(table_[c * stride + s], table_[(c - 1) * stride + s - p]);
    }
}

std::uint64_t PowerPartitionTable::count(std::uint64_t n, std::uint64_t j) const {
    if (n > max_n_ || j > max_j_) throw PreconditionError("PowerPartitionTable::count: outside table");
    return table_[j * (max_n_ + 1) + n];
}

std::vector<ShiftIdentityViolation> check_shift_identity(unsigned k, std::uint64_t max_n, std::uint64_t max_j) {
    if (k > 63) throw PreconditionError("check_shift_identity: k too large");
    PowerPartitionTable t(k, max_n + 1, max_j + 1);
    std::vector<ShiftIdentityViolation> out;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        for (std::uint64_t j = 2; j <= max_j; ++j) {
            std::uint64_t lhs = t.count(n, j), rhs = t.count(n + 1, j + 1);
            bool eq_expected = n < (std::uint64_t{1} << k) * j;
            if (lhs > rhs || (eq_expected && lhs != rhs)) out.push_back({k, n, j, lhs, rhs, eq_expected});
        }
    }
    return out;
}

}  // namespace waring
