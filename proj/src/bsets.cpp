#include "waring/bsets.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>

#include "waring/arith.hpp"
#include "waring/errors.hpp"

namespace waring {

std::uint64_t BSet::max() const {
    if (elements.empty()) throw PreconditionError("BSet::max on empty set");
    return elements.back();
}

bool BSet::contains(std::uint64_t n) const {
    return std::binary_search(elements.begin(), elements.end(), n);
}

BSet extract_bset(const RepSieve& sieve) {
    BSet out{sieve.k(), sieve.j(), sieve.limit(), {}, false};
    const auto words = sieve.bits().words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t clear = ~words[w];
        while (clear) {
            std::uint64_t n = w * 64 + std::countr_zero(clear);
            clear &= clear - 1;
            if (n >= sieve.limit()) break;
            if (n > 0) out.elements.push_back(n);
        }
    }
    return out;
}

std::vector<std::uint64_t> shifted_elements(const BSet& bset_j) {
    std::vector<std::uint64_t> out;
    auto it = std::upper_bound(bset_j.elements.begin(), bset_j.elements.end(), std::uint64_t{bset_j.j});
    out.reserve(std::distance(it, bset_j.elements.end()));
    for (; it != bset_j.elements.end(); ++it) out.push_back(*it - bset_j.j);
    return out;
}

BSet reduce(const BSet& bset_j, const BSet& base) {
    if (bset_j.j < 1) throw PreconditionError("reduce: B_j must carry j >= 1");
    if (base.k != bset_j.k) throw PreconditionError("reduce: base set has a different k");
    auto shifted = shifted_elements(bset_j);
    BSet out{bset_j.k, 0, bset_j.limit - bset_j.j, {}, bset_j.complete && base.complete};
    std::set_difference(shifted.begin(), shifted.end(), base.elements.begin(), base.elements.end(),
                        std::back_inserter(out.elements));
    return out;
}

ConsistencyVerdict check_consistency(const BSet& bset_j, const BSet& bset_j1) {
    if (bset_j.k != bset_j1.k || bset_j1.j != bset_j.j + 1)
        throw PreconditionError("check_consistency: need B_j and B_{j+1} for the same k");
    if (bset_j.k < 2 || bset_j.k > 63) throw PreconditionError("check_consistency: k must be in [2, 63]");
    if (bset_j.empty() || bset_j1.empty()) throw PreconditionError("check_consistency: empty B-set");
    const unsigned k = bset_j.k;
    const std::uint64_t two_k = std::uint64_t{1} << k;
    const std::uint64_t m = bset_j.max();
    if (m + two_k >= bset_j.limit || bset_j1.max() + two_k >= bset_j1.limit) {
        throw InconclusiveError("check_consistency: max(B_j)=" + std::to_string(m) + " within 2^k of limit " +
                                std::to_string(bset_j.limit));
    }

    ConsistencyVerdict v{k, bset_j.j, m, false, 0, 0, false, false};

    std::vector<std::uint64_t> expected;
    expected.reserve(bset_j.size() + 1);
    expected.push_back(1);
    for (auto n : bset_j.elements) expected.push_back(n + 1);
    v.condition1 = expected == bset_j1.elements;

    // (m-j)(1 + 1/(2^k-1)) = (m-j) 2^k / (2^k-1), floored root taken exactly.
    const std::uint64_t base = m > bset_j.j ? m - bset_j.j : 0;
    v.floor_lhs = iroot_floor_ratio(static_cast<unsigned __int128>(base) * two_k, two_k - 1, k);
    v.floor_rhs = iroot_floor(m, k);
    v.condition2 = v.floor_lhs == v.floor_rhs;
    v.stabilized = v.condition1 && v.condition2;
    return v;
}

bool check_chain_inclusion(const BSet& bset_j, const BSet& bset_j1) {
    if (bset_j.k != bset_j1.k || bset_j1.j != bset_j.j + 1)
        throw PreconditionError("check_chain_inclusion: need consecutive j for the same k");
    const std::uint64_t window = std::min(bset_j.limit - bset_j.j, bset_j1.limit - bset_j1.j);
    auto lower = shifted_elements(bset_j);
    auto upper = shifted_elements(bset_j1);
    std::erase_if(upper, [&](std::uint64_t x) { return x >= window; });
    return std::includes(lower.begin(), lower.end(), upper.begin(), upper.end());
}

std::uint64_t stabilization_bound(std::uint64_t a_jk, unsigned k) {
    if (a_jk < 1) throw PreconditionError("stabilization_bound: a must be >= 1");
    if (k < 1 || k > 63) throw PreconditionError("stabilization_bound: k out of range");
    const std::uint64_t den = (std::uint64_t{1} << k) - 1;
    return a_jk / den + (a_jk % den != 0);
}

StabilizationResult stabilize(unsigned k, std::uint64_t limit, unsigned jmax, const SieveOptions& opts) {
    if (k < 2) throw PreconditionError("stabilize: k must be >= 2");
    if (jmax < 1) throw PreconditionError("stabilize: jmax must be >= 1");
    StabilizationResult res{};
    res.k = k;
    res.limit = limit;
    RepSieve cur = sieve_base(k, limit, opts);
    BSet cur_set = extract_bset(cur);
    while (true) {
        res.j = cur.j();
        if (cur.j() >= jmax) break;
        RepSieve next = advance(cur, opts);
        BSet next_set = extract_bset(next);
        try {
            auto v = check_consistency(cur_set, next_set);
            if (v.stabilized) {
                res.stabilized = true;
                res.verdict = v;
                break;
            }
        } catch (const InconclusiveError&) {
            // tail still reaches the limit; keep advancing
        }
        cur = std::move(next);
        cur_set = std::move(next_set);
    }
    res.base = BSet{k, 0, limit - cur_set.j, shifted_elements(cur_set), res.stabilized};
    res.bset_j = std::move(cur_set);
    if (res.stabilized) res.bset_j.complete = true;
    return res;
}

bool classify_four_squares(std::uint64_t n) {
    if (n < 1) throw PreconditionError("classify_four_squares: n must be >= 1");
    if (n <= 3) return true;
    for (std::uint64_t beta : {1, 2, 4, 5, 7, 10, 13, 25, 37})
        if (n == 4 + beta) return true;
    std::uint64_t t = n;
    while (t % 4 == 0) t /= 4;
    return t == 2 || t == 6 || t == 14;
}

ThreeSquares classify_three_squares(std::uint64_t n) {
    if (n < 1) throw PreconditionError("classify_three_squares: n must be >= 1");
    std::uint64_t t = n;
    while (t % 4 == 0) t /= 4;
    if (t % 8 == 7) return ThreeSquares::obstruction_8m7;
    for (std::uint64_t x : {1, 2, 5, 10, 13, 25, 37, 58, 85, 130})
        if (t == x) return ThreeSquares::in_T_family;
    return ThreeSquares::representable;
}

bool three_cubes_obstruction(std::uint64_t n) {
    if (n < 1) throw PreconditionError("three_cubes_obstruction: n must be >= 1");
    return n % 9 == 4 || n % 9 == 5;
}

std::uint64_t fermat_lower_bound(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw PreconditionError("fermat_lower_bound: " + std::to_string(p) + " is not an odd prime");
    if (p > 64) throw RangeError("fermat_lower_bound: p^(p-1) exceeds 64 bits");
    return checked_mul(checked_pow(p, static_cast<unsigned>(p - 1)), (p - 1) / 2);
}

BSetStats bset_stats(const BSet& base) {
    if (base.empty()) throw PreconditionError("bset_stats: empty set");
    BSetStats s{base.k, base.max(), base.size(), false, true, false};
    s.sizemax = s.a == 2 * s.b - 1;
    s.odd = (s.a % 2 == 1) && (s.b % 2 == 1);
    for (std::uint64_t n = 0; n <= s.a; ++n) {
        if (base.contains(n) == base.contains(s.a - n)) {
            s.reverse = false;
            break;
        }
    }
    return s;
}

}  // namespace waring
