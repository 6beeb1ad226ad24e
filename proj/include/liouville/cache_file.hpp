#pragma once

// Binary sieve-cache files:
//   "LAMB" | version u16 | lo u64 | count u64 | count signed bytes
// All integers little-endian.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>

#include "liouville/arith_core.hpp"
#include "liouville/errors.hpp"

namespace liouville {

inline constexpr std::array<char, 4> cache_magic{'L', 'A', 'M', 'B'};
inline constexpr std::uint16_t cache_format_version = 1;
inline constexpr std::size_t cache_header_size = 4 + 2 + 8 + 8;

/// $LIOUVILLE_CACHE_DIR, or ./.cache when unset or empty.
inline std::filesystem::path cache_dir() {
    const char* env = std::getenv("LIOUVILLE_CACHE_DIR");
    if (env != nullptr && *env != '\0') return env;
    return ".cache";
}

namespace detail {
template <typename T>
void put_le(std::ostream& os, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(std::istream& is) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        int c = is.get();
        if (c == std::char_traits<char>::eof()) throw std::runtime_error("truncated cache header");
        v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}
} // namespace detail

/// FNV-1a over the raw payload bytes.
class Fnv1a {
public:
    void update(std::span<const std::int8_t> bytes) {
        for (std::int8_t b : bytes) {
            hash_ ^= static_cast<std::uint8_t>(b);
            hash_ *= 0x100000001b3ULL;
        }
    }
    std::uint64_t value() const { return hash_; }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

/// Streams a table file whose entry count is known up front.
class TableFileWriter {
public:
    TableFileWriter(const std::filesystem::path& path, u64 lo, u64 count)
        : path_(path), expected_(count), out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
        out_.write(cache_magic.data(), cache_magic.size());
        detail::put_le(out_, cache_format_version);
        detail::put_le(out_, lo);
        detail::put_le(out_, count);
    }

    void append(std::span<const std::int8_t> values) {
        if (written_ + values.size() > expected_) throw capacity_error("more entries than declared count");
        out_.write(reinterpret_cast<const char*>(values.data()), static_cast<std::streamsize>(values.size()));
        checksum_.update(values);
        written_ += values.size();
    }

    /// Flushes and verifies that exactly `count` entries were appended.
    void close() {
        if (written_ != expected_) throw std::runtime_error("cache file " + path_.string() + " is short");
        out_.flush();
        if (!out_) throw std::runtime_error("write to " + path_.string() + " failed");
        out_.close();
    }

    std::uint64_t checksum() const { return checksum_.value(); }

private:
    std::filesystem::path path_;
    u64 expected_;
    u64 written_ = 0;
    std::ofstream out_;
    Fnv1a checksum_;
};

inline void write_table_file(const std::filesystem::path& path, const ArithFnTable& table) {
    TableFileWriter w(path, table.lo, table.size());
    w.append(table.values);
    w.close();
}

inline ArithFnTable read_table_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != cache_magic) throw std::runtime_error(path.string() + ": bad magic");
    auto version = detail::get_le<std::uint16_t>(in);
    if (version != cache_format_version)
        throw std::runtime_error(path.string() + ": unsupported format version " + std::to_string(version));
    u64 lo = detail::get_le<u64>(in);
    u64 count = detail::get_le<u64>(in);
    if (lo == 0 || count == 0) throw std::runtime_error(path.string() + ": empty or zero-based table");
    std::vector<std::int8_t> values(count);
    in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(count));
    if (static_cast<u64>(in.gcount()) != count) throw std::runtime_error(path.string() + ": truncated payload");
    return ArithFnTable{lo, std::move(values)};
}

} // namespace liouville
