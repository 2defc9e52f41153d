#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "waring/sieve.hpp"

namespace waring {

// ---- sieve files -----------------------------------------------------------
//
// Little-endian layout:
//   0  char[4] "WRS1"
//   4  u16     version (1)
//   6  u16     k
//   8  u32     j
//  12  u64     limit
//  20  u64     payload length in bytes = ceil(limit/64) * 8
//  28  u64[]   bitmap words

inline constexpr std::uint16_t kSieveFileVersion = 1;
inline constexpr std::size_t kSieveHeaderSize = 28;

struct SieveFileHeader {
    std::uint16_t version;
    std::uint16_t k;
    std::uint32_t j;
    std::uint64_t limit;
    std::uint64_t payload_length;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_sieve(std::ostream& out, const RepSieve& sieve);
RepSieve read_sieve(std::istream& in);
void save_sieve(const std::filesystem::path& path, const RepSieve& sieve);
RepSieve load_sieve(const std::filesystem::path& path);

// ---- OEIS b-files ----------------------------------------------------------

struct BFileEntry {
    std::int64_t index;
    std::uint64_t value;
};

// "index value" per line; blank lines and lines starting with '#' skipped.
// Indices must be strictly increasing.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> load_bfile(const std::filesystem::path& path);

struct SequenceComparison {
    bool match;
    std::uint64_t limit;
    std::size_t compared;                       // values below limit on the b-file side
    std::optional<std::uint64_t> first_mismatch;  // smallest value in exactly one of the two lists
    bool missing_from_computed = false;         // mismatch present in the b-file only
};

// Compares b-file values below `limit` against an ascending computed list.
SequenceComparison compare_with_bfile(const std::vector<BFileEntry>& bfile, const std::vector<std::uint64_t>& computed,
                                      std::uint64_t limit);

// ---- decimal-lines sets ----------------------------------------------------

std::vector<std::uint64_t> read_decimal_lines(std::istream& in);
std::vector<std::uint64_t> load_decimal_lines(const std::filesystem::path& path);

// ---- config ----------------------------------------------------------------

inline constexpr const char* kConfigEnvVar = "WARING_CONFIG";

struct Config {
    std::uint64_t ram_cap = kDefaultRamCap;
    std::string cache_dir = ".waring-cache";
    double quad_tol = 1e-7;
    std::uint64_t mc_samples = 10'000'000;
    std::uint64_t mc_seed = 0x5eed'2024'0001ULL;
    std::uint64_t node_budget = 1'000'000'000;
    unsigned threads = 0;
};

// key=value per line, '#' comments. Unknown keys are an error. ram_cap accepts
// K/M/G/T binary suffixes.
Config parse_config(std::istream& in, Config base = {});

// Reads the file named by $WARING_CONFIG if set, else returns defaults.
Config load_config_from_env();

std::uint64_t parse_size(const std::string& text);

}  // namespace waring
