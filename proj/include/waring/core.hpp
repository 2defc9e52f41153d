#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace waring {

// Ascending positive k-th powers a^k <= limit.
class PowerTable {
public:
    PowerTable(unsigned k, std::uint64_t limit);

    unsigned k() const noexcept { return k_; }
    std::uint64_t limit() const noexcept { return limit_; }
    std::span<const std::uint64_t> powers() const noexcept { return powers_; }
    std::size_t size() const noexcept { return powers_.size(); }
    std::uint64_t operator[](std::size_t i) const { return powers_[i]; }

private:
    unsigned k_;
    std::uint64_t limit_;
    std::vector<std::uint64_t> powers_;
};

PowerTable build_power_table(unsigned k, std::uint64_t limit);

// Packed bit array, 64-bit words, bit n at word n/64, position n%64.
class Bitmap {
public:
    Bitmap() = default;
    explicit Bitmap(std::uint64_t nbits);

    std::uint64_t size() const noexcept { return nbits_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool test(std::uint64_t n) const noexcept { return (words_[n >> 6] >> (n & 63)) & 1u; }
    void set(std::uint64_t n) noexcept { words_[n >> 6] |= std::uint64_t{1} << (n & 63); }
    void reset(std::uint64_t n) noexcept { words_[n >> 6] &= ~(std::uint64_t{1} << (n & 63)); }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    // Clears the unused high bits of the last word.
    void trim() noexcept;

    std::uint64_t count() const noexcept;

    Bitmap& operator|=(const Bitmap& other);
    Bitmap& operator&=(const Bitmap& other);

    friend bool operator==(const Bitmap&, const Bitmap&) = default;

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// words_out[w] |= (src << shift)[w] for w in [w_begin, w_end).
void or_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                std::uint64_t shift, std::size_t w_begin, std::size_t w_end) noexcept;

enum class Provenance { proven, conjectured, upper_bound };

std::string_view to_string(Provenance p);

struct TaggedValue {
    std::uint64_t value;
    Provenance tag;
};

// Transcribed Waring constants for one exponent (k = 1..9).
struct KnownBounds {
    unsigned k;
    TaggedValue g;                       // g(k)
    TaggedValue G;                       // G(k), "sequences" table
    TaggedValue G1;                      // G(1,k), "sequences" table
    std::optional<TaggedValue> G1_nstar; // G(1,k) column of the n* table
    TaggedValue g1;                      // g(1,k), theorem-level value
    std::uint64_t g1_listed;             // g(1,k) as printed in the inline sequence
    std::optional<std::uint64_t> nstar;
    std::optional<unsigned> d;
    std::optional<unsigned> G_plus_d;
    // Largest integer known/conjectured not to be a sum of at most `parts`
    // (nonnegative for k=4) k-th powers.
    std::optional<TaggedValue> at_most_threshold;
    std::optional<unsigned> at_most_parts;

    bool g1_discrepancy() const noexcept { return g1.value != g1_listed; }
};

KnownBounds known_bounds(unsigned k);

}  // namespace waring
