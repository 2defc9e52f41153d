#include "waring/repfind.hpp"

#include <algorithm>
#include <string>

#include "waring/arith.hpp"
#include "waring/errors.hpp"

namespace waring {

std::uint64_t Representation::value() const {
    std::uint64_t s = 0;
    for (auto b : parts) s = checked_add(s, checked_pow(b, k));
    return s;
}

namespace {

class Search {
public:
    Search(unsigned k, const SearchOptions& opts) : k_(k), opts_(opts) {
        if (opts_.prune && opts_.prune->k() != k) opts_.prune = nullptr;
    }

    // Fills parts_ and returns true on success; `cap` bounds the next base.
    bool run(std::uint64_t n, unsigned j, std::uint64_t cap) {
        if (++nodes_ > opts_.node_budget) {
            exhausted_ = true;
            return false;
        }
        if (j == 1) {
            std::uint64_t r = iroot_floor(n, k_);
            std::uint64_t p;
            if (r >= 1 && r <= cap && pow_at_most(r, k_, n, &p) && p == n) {
                parts_.push_back(r);
                return true;
            }
            return false;
        }
        if (n < j) return false;
        if (opts_.prune && j == opts_.prune->j() && n < opts_.prune->limit() && !opts_.prune->test(n))
            return false;
        std::uint64_t hi = std::min(cap, iroot_floor(n, k_));
        std::uint64_t lo = std::max<std::uint64_t>(1, iroot_ceil_ratio(n, j, k_));
        for (std::uint64_t b = hi; b >= lo; --b) {
            std::uint64_t bk = checked_pow(b, k_);
            // remaining j-1 parts need at least j-1 and at most (j-1) b^k
            if (n - bk < j - 1) continue;
            parts_.push_back(b);
            if (run(n - bk, j - 1, b)) return true;
            parts_.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }

    std::vector<std::uint64_t> take_parts() { return std::move(parts_); }
    std::uint64_t nodes() const noexcept { return nodes_; }
    bool exhausted() const noexcept { return exhausted_; }

private:
    unsigned k_;
    SearchOptions opts_;
    std::vector<std::uint64_t> parts_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

SearchResult find_representation(std::uint64_t n, unsigned j, unsigned k, const SearchOptions& opts) {
    if (j < 1 || k < 1) throw PreconditionError("find_representation: j and k must be >= 1");
    if (n < j) throw PreconditionError("find_representation: need n >= j");
    Search s(k, opts);
    bool ok = s.run(n, j, iroot_floor(n, k));
    if (ok) return {SearchStatus::found, Representation{k, s.take_parts()}, s.nodes()};
    return {s.exhausted() ? SearchStatus::budget_exhausted : SearchStatus::none, std::nullopt, s.nodes()};
}

std::optional<RepSieve> make_prune_sieve(unsigned k, std::uint64_t n, unsigned jprime, const SieveOptions& sopts) {
    const std::uint64_t limit = n + 1;
    try {
        check_memory_budget(limit, 2, sopts);
        return sieve_exact(k, jprime, std::max<std::uint64_t>(limit, 2), sopts);
    } catch (const ResourceError&) {
        return std::nullopt;
    }
}

NStarCertificate verify_nstar(std::uint64_t nstar, unsigned k, unsigned d, unsigned jmax,
                              std::uint64_t node_budget, const SieveOptions& sopts) {
    if (d < 1 || jmax < d) throw PreconditionError("verify_nstar: need 1 <= d <= jmax");
    if (nstar < jmax) throw PreconditionError("verify_nstar: need nstar >= jmax");
    auto prune = make_prune_sieve(k, nstar, 4, sopts);
    SearchOptions opts{prune ? &*prune : nullptr, node_budget};
    NStarCertificate cert{nstar, k, d, jmax, {}};
    for (unsigned j = d; j <= jmax; ++j) {
        auto r = find_representation(nstar, j, k, opts);
        if (r.status == SearchStatus::budget_exhausted)
            throw InconclusiveError("verify_nstar: node budget exhausted at j=" + std::to_string(j));
        if (r.status == SearchStatus::none)
            throw CertificateError("verify_nstar: " + std::to_string(nstar) + " has no (" + std::to_string(j) + "," +
                                       std::to_string(k) + ")-representation",
                                   j);
        cert.representations.push_back(std::move(*r.representation));
    }
    return cert;
}

bool certificate_valid(const NStarCertificate& cert) {
    if (cert.representations.size() != cert.jmax - cert.d + 1) return false;
    for (unsigned i = 0; i < cert.representations.size(); ++i) {
        const auto& r = cert.representations[i];
        if (r.k != cert.k || r.j() != cert.d + i) return false;
        if (!std::is_sorted(r.parts.rbegin(), r.parts.rend())) return false;
        if (std::find(r.parts.begin(), r.parts.end(), 0) != r.parts.end()) return false;
        if (r.value() != cert.nstar) return false;
    }
    return true;
}

}  // namespace waring
