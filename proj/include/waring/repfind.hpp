#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/sieve.hpp"

namespace waring {

// Bases of a (j,k)-representation in non-increasing order.
struct Representation {
    unsigned k;
    std::vector<std::uint64_t> parts;

    unsigned j() const noexcept { return static_cast<unsigned>(parts.size()); }
    // Checked sum of parts^k.
    std::uint64_t value() const;

    friend bool operator==(const Representation&, const Representation&) = default;
};

enum class SearchStatus { found, none, budget_exhausted };

struct SearchResult {
    SearchStatus status;
    std::optional<Representation> representation;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct SearchOptions {
    // Sieve of (prune->j(), k)-representable numbers; consulted whenever the
    // remaining part count equals prune->j(). Ignored if k differs.
    const RepSieve* prune = nullptr;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

// Depth-first, largest base first, bases bounded by ceil((n/j)^(1/k)) and floor(n^(1/k)).
// Returns the first representation in that canonical order.
SearchResult find_representation(std::uint64_t n, unsigned j, unsigned k, const SearchOptions& opts = {});

// Sieve for the prune check, sized to cover n (or nullopt if over the RAM cap).
std::optional<RepSieve> make_prune_sieve(unsigned k, std::uint64_t n, unsigned jprime = 4,
                                         const SieveOptions& sopts = {});

struct NStarCertificate {
    std::uint64_t nstar;
    unsigned k;
    unsigned d;
    unsigned jmax;
    std::vector<Representation> representations;  // j = d .. jmax
};

// Throws CertificateError naming the first j without a representation, or
// InconclusiveError when the node budget runs out.
NStarCertificate verify_nstar(std::uint64_t nstar, unsigned k, unsigned d, unsigned jmax,
                              std::uint64_t node_budget = kDefaultNodeBudget, const SieveOptions& sopts = {});

bool certificate_valid(const NStarCertificate& cert);

}  // namespace waring
