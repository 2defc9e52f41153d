#include "waring/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "waring/errors.hpp"

namespace waring {

namespace {

template <class T>
void put_le(std::ostream& out, T v) {
    std::array<char, sizeof(T)> buf;
    for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(buf.data(), buf.size());
}

template <class T>
T get_le(std::istream& in) {
    std::array<unsigned char, sizeof(T)> buf;
    if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size())) throw FormatError("sieve file truncated");
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
    return v;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

template <class T>
bool parse_number(std::string_view s, T& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

void write_sieve(std::ostream& out, const RepSieve& sieve) {
    if (sieve.k() > 0xffff) throw FormatError("sieve file: k does not fit in u16");
    const auto words = sieve.bits().words();
    out.write("WRS1", 4);
    put_le<std::uint16_t>(out, kSieveFileVersion);
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(sieve.k()));
    put_le<std::uint32_t>(out, sieve.j());
    put_le<std::uint64_t>(out, sieve.limit());
    put_le<std::uint64_t>(out, words.size() * 8);
    for (auto w : words) put_le<std::uint64_t>(out, w);
    if (!out) throw FormatError("sieve file: write failed");
}

RepSieve read_sieve(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "WRS1", 4) != 0) throw FormatError("sieve file: bad magic");
    SieveFileHeader h{};
    h.version = get_le<std::uint16_t>(in);
    if (h.version != kSieveFileVersion) throw FormatError("sieve file: unsupported version " + std::to_string(h.version));
    h.k = get_le<std::uint16_t>(in);
    h.j = get_le<std::uint32_t>(in);
    h.limit = get_le<std::uint64_t>(in);
    h.payload_length = get_le<std::uint64_t>(in);
    if (h.payload_length != (h.limit + 63) / 64 * 8) throw FormatError("sieve file: payload length mismatch");
    if (h.k < 1 || h.j < 1) throw FormatError("sieve file: k and j must be >= 1");
    Bitmap bits(h.limit);
    for (auto& w : bits.words()) w = get_le<std::uint64_t>(in);
    if (in.peek() != std::char_traits<char>::eof()) throw FormatError("sieve file: trailing bytes");
    Bitmap check = bits;
    check.trim();
    if (!(check == bits)) throw FormatError("sieve file: bits set beyond limit");
    return RepSieve(h.k, h.j, h.limit, std::move(bits));
}

void save_sieve(const std::filesystem::path& path, const RepSieve& sieve) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path.string() + " for writing");
    write_sieve(out, sieve);
}

RepSieve load_sieve(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    return read_sieve(in);
}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream fields(t);
        std::string a, b, extra;
        fields >> a >> b;
        BFileEntry e{};
        if (!parse_number(a, e.index) || !parse_number(b, e.value) || (fields >> extra))
            throw FormatError("b-file line " + std::to_string(lineno) + ": expected 'index value'");
        if (!out.empty() && e.index <= out.back().index)
            throw FormatError("b-file line " + std::to_string(lineno) + ": indices not strictly increasing");
        out.push_back(e);
    }
    return out;
}

std::vector<BFileEntry> load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    return parse_bfile(in);
}

SequenceComparison compare_with_bfile(const std::vector<BFileEntry>& bfile, const std::vector<std::uint64_t>& computed,
                                      std::uint64_t limit) {
    std::vector<std::uint64_t> expected;
    for (const auto& e : bfile)
        if (e.value < limit) expected.push_back(e.value);
    std::sort(expected.begin(), expected.end());
    std::vector<std::uint64_t> got;
    std::copy_if(computed.begin(), computed.end(), std::back_inserter(got), [&](auto v) { return v < limit; });

    SequenceComparison res{true, limit, expected.size(), std::nullopt};
    auto ie = expected.begin();
    auto ig = got.begin();
    while (ie != expected.end() || ig != got.end()) {
        if (ie != expected.end() && ig != got.end() && *ie == *ig) {
            ++ie;
            ++ig;
            continue;
        }
        res.match = false;
        if (ig == got.end() || (ie != expected.end() && *ie < *ig)) {
            res.first_mismatch = *ie;
            res.missing_from_computed = true;
        } else {
            res.first_mismatch = *ig;
        }
        break;
    }
    return res;
}

std::vector<std::uint64_t> read_decimal_lines(std::istream& in) {
    std::vector<std::uint64_t> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::uint64_t v;
        if (!parse_number(t, v)) throw FormatError("line " + std::to_string(lineno) + ": not an unsigned integer");
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> load_decimal_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    return read_decimal_lines(in);
}

std::uint64_t parse_size(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw FormatError("empty size");
    std::uint64_t mult = 1;
    char last = static_cast<char>(std::toupper(static_cast<unsigned char>(t.back())));
    const std::string_view suffixes = "KMGT";
    if (auto pos = suffixes.find(last); pos != std::string_view::npos) {
        mult = std::uint64_t{1} << (10 * (pos + 1));
        t.pop_back();
    }
    std::uint64_t v;
    if (!parse_number(t, v)) throw FormatError("bad size: " + text);
    if (v > UINT64_MAX / mult) throw FormatError("size overflows: " + text);
    return v * mult;
}

Config parse_config(std::istream& in, Config cfg) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw FormatError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        auto bad = [&] { return FormatError("config line " + std::to_string(lineno) + ": bad value for " + key); };
        if (key == "ram_cap") {
            cfg.ram_cap = parse_size(val);
        } else if (key == "cache_dir") {
            cfg.cache_dir = val;
        } else if (key == "quad_tol") {
            char* end = nullptr;
            cfg.quad_tol = std::strtod(val.c_str(), &end);
            if (end == val.c_str() || *end != '\0' || !(cfg.quad_tol > 0)) throw bad();
        } else if (key == "mc_samples") {
            if (!parse_number(val, cfg.mc_samples)) throw bad();
        } else if (key == "mc_seed") {
            if (!parse_number(val, cfg.mc_seed)) throw bad();
        } else if (key == "node_budget") {
            if (!parse_number(val, cfg.node_budget)) throw bad();
        } else if (key == "threads") {
            if (!parse_number(val, cfg.threads)) throw bad();
        } else {
            throw FormatError("config line " + std::to_string(lineno) + ": unknown key " + key);
        }
    }
    return cfg;
}

Config load_config_from_env() {
    const char* path = std::getenv(kConfigEnvVar);
    if (!path || !*path) return {};
    std::ifstream in(path);
    if (!in) throw FormatError(std::string("cannot open config ") + path);
    return parse_config(in);
}

}  // namespace waring
