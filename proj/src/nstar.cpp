#include "waring/nstar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "waring/arith.hpp"
#include "waring/errors.hpp"

namespace waring {

std::vector<std::uint64_t> search_candidates(unsigned k, unsigned d, std::uint64_t lo, std::uint64_t hi,
                                             unsigned stages, const SieveOptions& opts) {
    if (lo >= hi) throw PreconditionError("search_candidates: need lo < hi");
    if (d < 1 || stages < 1) throw PreconditionError("search_candidates: d and stages must be >= 1");
    check_memory_budget(hi, 3, opts);
    RepSieve cur = sieve_exact(k, d, std::max<std::uint64_t>(hi, 2), opts);
    Bitmap acc = cur.bits();
    for (unsigned s = 1; s < stages; ++s) {
        cur = advance(cur, opts);
        acc &= cur.bits();
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo + 1; n < hi; ++n)
        if (acc.test(n)) out.push_back(n);
    return out;
}

std::vector<CandidateReport> verify_candidates(const std::vector<std::uint64_t>& candidates, unsigned k, unsigned d,
                                               unsigned jmax, std::uint64_t node_budget, const SieveOptions& opts) {
    std::vector<CandidateReport> out;
    for (auto n : candidates) {
        CandidateReport rep{n, CandidateStatus::verified, jmax, std::nullopt};
        try {
            rep.certificate = verify_nstar(n, k, d, jmax, node_budget, opts);
        } catch (const CertificateError& e) {
            rep.status = CandidateStatus::failed;
            rep.stage_reached = e.j() - 1;
        } catch (const InconclusiveError&) {
            rep.status = CandidateStatus::inconclusive;
            rep.stage_reached = d - 1;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

NStarCertificate double_candidate(std::uint64_t nu, unsigned delta, unsigned k, std::uint64_t node_budget) {
    if (delta < 1) throw PreconditionError("double_candidate: delta must be >= 1");
    if (nu < delta + 1) throw PreconditionError("double_candidate: need nu >= delta + 1");
    SearchOptions opts{nullptr, node_budget};
    auto fetch = [&](unsigned j) {
        auto r = find_representation(nu, j, k, opts);
        if (r.status == SearchStatus::budget_exhausted)
            throw InconclusiveError("double_candidate: node budget exhausted at j=" + std::to_string(j));
        if (r.status != SearchStatus::found)
            throw CertificateError("double_candidate: " + std::to_string(nu) + " has no (" + std::to_string(j) + "," +
                                       std::to_string(k) + ")-representation",
                                   j);
        return *r.representation;
    };
    const Representation small = fetch(delta);
    const Representation large = fetch(delta + 1);
    auto join = [k](const Representation& a, const Representation& b) {
        Representation r{k, a.parts};
        r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
        std::sort(r.parts.begin(), r.parts.end(), std::greater<>());
        return r;
    };
    NStarCertificate cert{checked_mul(nu, 2), k, 2 * delta, 2 * delta + 2, {}};
    cert.representations = {join(small, small), join(small, large), join(large, large)};
    return cert;
}

Rational heuristic_exponent(unsigned k, unsigned d) {
    if (k < 1) throw PreconditionError("heuristic_exponent: k must be >= 1");
    const std::int64_t x = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(d);
    return Rational(-x * (x + 1), 2 * static_cast<std::int64_t>(k));
}

MinDEstimate min_d_heuristic(unsigned k) {
    if (k < 2) throw PreconditionError("min_d_heuristic: k must be >= 2");
    const double d = k + (1.0 - std::sqrt(1.0 + 8.0 * k)) / 2.0;
    // d is an exact integer whenever 1+8k is a perfect square.
    const std::uint64_t disc = 1 + 8 * std::uint64_t{k};
    const std::uint64_t s = iroot_floor(disc, 2);
    unsigned lo, hi;
    if (s * s == disc) {
        lo = hi = static_cast<unsigned>(k - (s - 1) / 2);
    } else {
        lo = static_cast<unsigned>(std::floor(d));
        hi = lo + 1;
    }
    return {d, lo, hi, heuristic_exponent(k, lo), heuristic_exponent(k, hi)};
}

}  // namespace waring
