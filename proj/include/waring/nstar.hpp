#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "waring/repfind.hpp"
#include "waring/sieve.hpp"

namespace waring {

using Rational = boost::rational<std::int64_t>;

// All n with lo < n < hi that are (j,k)-representable for every j in [d, d+stages-1].
std::vector<std::uint64_t> search_candidates(unsigned k, unsigned d, std::uint64_t lo, std::uint64_t hi,
                                             unsigned stages = 4, const SieveOptions& opts = {});

enum class CandidateStatus { verified, failed, inconclusive };

struct CandidateReport {
    std::uint64_t n;
    CandidateStatus status;
    unsigned stage_reached;  // largest j with a representation found
    std::optional<NStarCertificate> certificate;
};

// Runs verify_nstar(n, k, d, jmax) on each candidate; reports every candidate.
std::vector<CandidateReport> verify_candidates(const std::vector<std::uint64_t>& candidates, unsigned k, unsigned d,
                                               unsigned jmax, std::uint64_t node_budget = kDefaultNodeBudget,
                                               const SieveOptions& opts = {});

// n* = 2 nu with d = 2 delta, built from a delta- and a (delta+1)-part
// representation of nu. Throws CertificateError when nu lacks one of them.
NStarCertificate double_candidate(std::uint64_t nu, unsigned delta, unsigned k,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

// E(d) = -(k-d)(k-d+1)/(2k), exact.
Rational heuristic_exponent(unsigned k, unsigned d);

struct MinDEstimate {
    double d;                  // k + (1 - sqrt(1+8k))/2
    unsigned d_floor;
    unsigned d_ceil;
    Rational exponent_floor;   // E(d_floor)
    Rational exponent_ceil;    // E(d_ceil)
};

MinDEstimate min_d_heuristic(unsigned k);

}  // namespace waring
