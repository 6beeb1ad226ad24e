#pragma once

#include <bit>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "liouville/arith_core.hpp"
#include "liouville/errors.hpp"
#include "liouville/numeric.hpp"

namespace liouville {

/// The arithmetic function a that is convolved with q to form h = q * a.
///
/// Built-in choices have closed forms for a(n) and A(x) = sum_{n<=x} |a(n)|.
/// Custom tables cover [1, N] and read as zero beyond N.
class ASpec {
public:
    enum class Kind { square, unit_at_1, powers_of_2, all_ones, custom };

    static ASpec square() { return ASpec(Kind::square, "square"); }
    static ASpec unit_at_1() { return ASpec(Kind::unit_at_1, "unit-at-1"); }
    static ASpec powers_of_2() { return ASpec(Kind::powers_of_2, "powers-of-2"); }
    static ASpec all_ones() { return ASpec(Kind::all_ones, "all-ones"); }

    static ASpec custom(ArithFnTable table, std::string label) {
        if (table.lo != 1) throw domain_error("custom a table must start at n = 1");
        ASpec spec(Kind::custom, std::move(label));
        spec.abs_prefix_.assign(table.size() + 1, 0);
        spec.signed_prefix_.assign(table.size() + 1, 0);
        for (std::size_t i = 0; i < table.size(); ++i) {
            spec.abs_prefix_[i + 1] = spec.abs_prefix_[i] + std::abs(table.values[i]);
            spec.signed_prefix_[i + 1] = spec.signed_prefix_[i] + table.values[i];
        }
        spec.table_ = std::move(table);
        return spec;
    }

    /// Accepts square, unit-at-1 (or unit), powers-of-2 (or pow2), all-ones.
    static ASpec from_name(std::string_view name) {
        if (name == "square") return square();
        if (name == "unit-at-1" || name == "unit") return unit_at_1();
        if (name == "powers-of-2" || name == "pow2") return powers_of_2();
        if (name == "all-ones") return all_ones();
        throw domain_error("unknown a_spec '" + std::string(name) + "'");
    }

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    int operator()(u64 n) const {
        switch (kind_) {
        case Kind::square: return is_square(n) ? 1 : 0;
        case Kind::unit_at_1: return n == 1 ? 1 : 0;
        case Kind::powers_of_2: return std::has_single_bit(n) ? 1 : 0;
        case Kind::all_ones: return 1;
        case Kind::custom: return table_.covers(n) ? table_(n) : 0;
        }
        return 0;
    }

    /// A(x) = sum_{n<=x} |a(n)|.
    u64 abs_sum(u64 x) const {
        switch (kind_) {
        case Kind::square: return isqrt(x);
        case Kind::unit_at_1: return x >= 1 ? 1 : 0;
        case Kind::powers_of_2: return static_cast<u64>(std::bit_width(x));
        case Kind::all_ones: return x;
        case Kind::custom: return static_cast<u64>(abs_prefix_[std::min<u64>(x, table_.size())]);
        }
        return 0;
    }

    /// sum_{n<=x} a(n), the summatory function used in hyperbola splits.
    i64 sum(u64 x) const {
        if (kind_ == Kind::custom) return signed_prefix_[std::min<u64>(x, table_.size())];
        return static_cast<i64>(abs_sum(x));
    }

    /// Calls visit(n, a(n)) for every n <= limit with a(n) != 0, increasing n.
    template <typename Visit>
    void for_each_nonzero(u64 limit, Visit&& visit) const {
        switch (kind_) {
        case Kind::square:
            for (u64 r = 1; r * r <= limit; ++r) visit(r * r, 1);
            break;
        case Kind::unit_at_1:
            if (limit >= 1) visit(u64{1}, 1);
            break;
        case Kind::powers_of_2:
            for (u64 p = 1; p <= limit; p *= 2) {
                visit(p, 1);
                if (p > limit / 2) break;
            }
            break;
        case Kind::all_ones:
            for (u64 n = 1; n <= limit; ++n) visit(n, 1);
            break;
        case Kind::custom:
            for (u64 n = 1; n <= std::min<u64>(limit, table_.size()); ++n)
                if (table_(n) != 0) visit(n, static_cast<int>(table_(n)));
            break;
        }
    }

    ArithFnTable table(u64 n) const {
        std::vector<std::int8_t> v(n);
        for (u64 i = 1; i <= n; ++i) v[i - 1] = static_cast<std::int8_t>((*this)(i));
        return ArithFnTable{1, std::move(v)};
    }

private:
    ASpec(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    ArithFnTable table_;
    std::vector<i64> abs_prefix_;
    std::vector<i64> signed_prefix_;
};

/// Reads a two-column CSV `n,value`. Blank lines, `#` comments and a
/// non-numeric header row are skipped; missing n read as 0.
inline ArithFnTable read_a_table_csv(std::istream& in) {
    std::map<u64, int> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw domain_error("line " + std::to_string(line_no) + ": expected n,value");
        std::string n_str = line.substr(0, comma);
        std::string v_str = line.substr(comma + 1);
        char* end = nullptr;
        unsigned long long n = std::strtoull(n_str.c_str(), &end, 10);
        if (end == n_str.c_str()) {
            if (entries.empty()) continue;  // header
            throw domain_error("line " + std::to_string(line_no) + ": bad index");
        }
        long v = std::strtol(v_str.c_str(), &end, 10);
        if (end == v_str.c_str()) throw domain_error("line " + std::to_string(line_no) + ": bad value");
        if (n == 0) throw domain_error("line " + std::to_string(line_no) + ": n must be >= 1");
        if (v < -1 || v > 1)
            throw hypothesis_error("line " + std::to_string(line_no) + ": |a(n)| must be <= 1, got " +
                                   std::to_string(v));
        if (!entries.emplace(n, static_cast<int>(v)).second)
            throw domain_error("line " + std::to_string(line_no) + ": duplicate n = " + std::to_string(n));
    }
    if (entries.empty()) throw domain_error("custom a table is empty");
    std::vector<std::int8_t> values(entries.rbegin()->first, 0);
    for (auto [n, v] : entries) values[n - 1] = static_cast<std::int8_t>(v);
    return ArithFnTable{1, std::move(values)};
}

} // namespace liouville
