#include "waring/core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "waring/arith.hpp"
#include "waring/errors.hpp"

namespace waring {

PowerTable::PowerTable(unsigned k, std::uint64_t limit) : k_(k), limit_(limit) {
    if (k < 1) throw PreconditionError("power table: k must be >= 1");
    if (limit < 1) throw PreconditionError("power table: limit must be >= 1");
    for (std::uint64_t a = 1;; ++a) {
        std::uint64_t p = 0;
        if (!pow_at_most(a, k, limit, &p)) break;
        powers_.push_back(p);
        if (k == 1 && a == limit) break;
    }
}

PowerTable build_power_table(unsigned k, std::uint64_t limit) { return PowerTable(k, limit); }

Bitmap::Bitmap(std::uint64_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

void Bitmap::trim() noexcept {
    if (nbits_ % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
}

std::uint64_t Bitmap::count() const noexcept {
    std::uint64_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

Bitmap& Bitmap::operator|=(const Bitmap& other) {
    if (other.nbits_ != nbits_) throw PreconditionError("bitmap size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitmap& Bitmap::operator&=(const Bitmap& other) {
    if (other.nbits_ != nbits_) throw PreconditionError("bitmap size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

void or_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                std::uint64_t shift, std::size_t w_begin, std::size_t w_end) noexcept {
    const std::uint64_t q = shift >> 6;
    const unsigned r = shift & 63;
    w_end = std::min(w_end, dst.size());
    std::size_t w = std::max<std::uint64_t>(w_begin, q);
    if (r == 0) {
        for (; w < w_end; ++w) dst[w] |= src[w - q];
        return;
    }
    if (w == q && w < w_end) {
        dst[w] |= src[0] << r;
        ++w;
    }
    for (; w < w_end; ++w) dst[w] |= (src[w - q] << r) | (src[w - q - 1] >> (64 - r));
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::proven: return "proven";
        case Provenance::conjectured: return "conjectured";
        case Provenance::upper_bound: return "upper-bound";
    }
    return "?";
}

KnownBounds known_bounds(unsigned k) {
    using P = Provenance;
    constexpr auto pr = P::proven;
    constexpr auto cj = P::conjectured;
    constexpr auto ub = P::upper_bound;
    switch (k) {
        case 1:
            return {1, {1, pr}, {1, pr}, {1, pr}, std::nullopt, {1, pr}, 1,
                    std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
        case 2:
            return {2, {4, pr}, {4, pr}, {5, pr}, TaggedValue{5, pr}, {6, pr}, 6,
                    169, 1, 5, std::nullopt, std::nullopt};
        case 3:
            return {3, {9, pr}, {7, ub}, {9, ub}, TaggedValue{9, ub}, {14, pr}, 15,
                    1072, 2, 9, TaggedValue{454, pr}, 7};
        case 4:
            return {4, {19, pr}, {16, pr}, {18, pr}, TaggedValue{18, ub}, {21, pr}, 22,
                    77900162, 2, 18, TaggedValue{13792, pr}, 16};
        case 5:
            return {5, {37, pr}, {17, ub}, {20, ub}, TaggedValue{11, cj}, {57, pr}, 58,
                    100000497376ULL, 3, 20, TaggedValue{87918, cj}, 17};
        case 6:
            return {6, {73, pr}, {24, ub}, {29, ub}, TaggedValue{18, cj}, {78, pr}, 78,
                    41253168892ULL, 5, 29, TaggedValue{1414564, cj}, 24};
        case 7:
            return {7, {143, pr}, {33, ub}, {40, ub}, TaggedValue{25, cj}, {245, pr}, 244,
                    822480142011ULL, 7, 40, TaggedValue{9930770, cj}, 33};
        case 8:
            return {8, {279, pr}, {42, ub}, {52, ub}, TaggedValue{47, cj}, {334, pr}, 334,
                    17373783550950ULL, 9, 51, TaggedValue{858367748, cj}, 42};
        case 9:
            return {9, {548, pr}, {50, ub}, {117, ub}, TaggedValue{121, cj}, {717, cj}, 717,
                    25636699123453928ULL, 14, 64, std::nullopt, std::nullopt};
        default:
            throw NotFoundError("known_bounds: no transcribed constants for k=" + std::to_string(k));
    }
}

}  // namespace waring
