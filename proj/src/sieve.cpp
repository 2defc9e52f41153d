#include "waring/sieve.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "waring/arith.hpp"
#include "waring/errors.hpp"

namespace waring {

namespace {

// Below this many words a single thread is faster than spawning workers.
constexpr std::size_t kParallelWordThreshold = std::size_t{1} << 15;

unsigned worker_count(const SieveOptions& opts, std::size_t words) {
    if (words < kParallelWordThreshold) return 1;
    unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(t, words / 1024));
}

// Partitions [0, words) into disjoint ranges; fn(begin, end) writes only its range.
template <class Fn>
void for_word_ranges(std::size_t words, unsigned workers, Fn&& fn) {
    if (workers <= 1) {
        fn(std::size_t{0}, words);
        return;
    }
    std::vector<std::jthread> pool;
    std::size_t chunk = (words + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t b = t * chunk, e = std::min(words, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
}

}  // namespace

void check_memory_budget(std::uint64_t limit, unsigned bitmaps, const SieveOptions& opts) {
    const unsigned __int128 need = static_cast<unsigned __int128>((limit + 63) / 64) * 8 * bitmaps;
    const unsigned __int128 allowed = static_cast<unsigned __int128>(opts.ram_cap) * 3 / 4;
    if (need > allowed) {
        throw ResourceError("sieve limit " + std::to_string(limit) + " needs " +
                            std::to_string(static_cast<std::uint64_t>(need)) +
                            " bytes, over 75% of the RAM cap " + std::to_string(opts.ram_cap));
    }
}

RepSieve::RepSieve(unsigned k, unsigned j, std::uint64_t limit, Bitmap bits)
    : k_(k), j_(j), bits_(std::move(bits)) {
    if (bits_.size() != limit) throw PreconditionError("RepSieve: bitmap length differs from limit");
    if (k < 1 || j < 1) throw PreconditionError("RepSieve: k and j must be >= 1");
}

RepSieve sieve_base(unsigned k, std::uint64_t limit, const SieveOptions& opts) {
    if (limit < 2) throw PreconditionError("sieve_base: limit must be >= 2");
    check_memory_budget(limit, 2, opts);
    Bitmap bits(limit);
    const PowerTable table(k, limit - 1);
    for (auto p : table.powers()) bits.set(p);
    return RepSieve(k, 1, limit, std::move(bits));
}

RepSieve advance(const RepSieve& prev, const SieveOptions& opts) {
    const std::uint64_t limit = prev.limit();
    const PowerTable table(prev.k(), limit - 1);
    Bitmap next(limit);
    auto dst = next.words();
    auto src = prev.bits().words();
    for_word_ranges(dst.size(), worker_count(opts, dst.size()), [&](std::size_t b, std::size_t e) {
        for (auto p : table.powers()) or_shifted(dst, src, p, b, e);
    });
    next.trim();
    return RepSieve(prev.k(), prev.j() + 1, limit, std::move(next));
}

RepSieve sieve_exact(unsigned k, unsigned j, std::uint64_t limit, const SieveOptions& opts) {
    if (j < 1) throw PreconditionError("sieve_exact: j must be >= 1");
    RepSieve s = sieve_base(k, limit, opts);
    while (s.j() < j) s = advance(s, opts);
    return s;
}

RepSieve sieve_at_most(unsigned k, unsigned jmax, std::uint64_t limit, const SieveOptions& opts) {
    if (jmax < 1) throw PreconditionError("sieve_at_most: jmax must be >= 1");
    check_memory_budget(limit, 3, opts);
    RepSieve cur = sieve_base(k, limit, opts);
    Bitmap acc = cur.bits();
    while (cur.j() < jmax) {
        cur = advance(cur, opts);
        acc |= cur.bits();
    }
    return RepSieve(k, jmax, limit, std::move(acc));
}

IntervalCertificate extend_interval(const IntervalCertificate& cert, std::uint64_t a) {
    if (a < 1) throw PreconditionError("extend_interval: step a must be >= 1");
    if (cert.upper <= cert.lower) throw PreconditionError("extend_interval: empty interval");
    const std::uint64_t ak = checked_pow(a, cert.k);
    const std::uint64_t diff = ak - checked_pow(a - 1, cert.k);
    const std::uint64_t width = cert.upper - cert.lower;
    if (!(diff < width)) {
        throw PreconditionError("extend_interval: a^k - (a-1)^k < N - n fails (" + std::to_string(diff) +
                                " >= " + std::to_string(width) + ")");
    }
    return {cert.k, cert.j + 1, checked_add(cert.lower, 1), checked_add(cert.upper, ak), a};
}

std::uint64_t nstar_application_bound(std::uint64_t nstar, unsigned /*d*/, unsigned /*b*/, std::uint64_t n0) {
    return checked_add(nstar, n0);
}

}  // namespace waring
