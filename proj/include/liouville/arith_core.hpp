#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/numeric.hpp"

namespace liouville {

enum class ArithFn : std::uint8_t { liouville, mobius };

inline std::string_view to_string(ArithFn fn) {
    return fn == ArithFn::liouville ? "lambda" : "mobius";
}

/// Default and maximum number of entries produced by one block sieve call.
inline constexpr std::size_t default_block_size = std::size_t{1} << 22;

/// Dense samples f(lo), f(lo+1), ..., f(hi) of an arithmetic function.
template <typename T>
struct BasicTable {
    u64 lo = 1;
    std::vector<T> values;

    BasicTable() = default;
    BasicTable(u64 first, std::vector<T> v) : lo(first), values(std::move(v)) {
        if (lo == 0) throw domain_error("table index must start at 1 or later");
    }

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    u64 hi() const { return lo + values.size() - 1; }
    bool covers(u64 n) const { return n >= lo && n - lo < values.size(); }

    T operator()(u64 n) const { return values[n - lo]; }
    T at(u64 n) const {
        if (!covers(n))
            throw domain_error("index " + std::to_string(n) + " outside table [" +
                               std::to_string(lo) + ", " + std::to_string(hi()) + "]");
        return values[n - lo];
    }
};

using ArithFnTable = BasicTable<std::int8_t>;

namespace detail {
inline void require_positive(u64 n, const char* what) {
    if (n == 0) throw domain_error(std::string(what) + " is undefined at n = 0");
}
} // namespace detail

/// lambda(n) = (-1)^Omega(n), by trial division.
inline int liouville(u64 n) {
    detail::require_positive(n, "liouville");
    int parity = std::countr_zero(n) & 1;
    n >>= std::countr_zero(n);
    for (u64 p = 3; p <= n / p; p += 2) {
        while (n % p == 0) {
            n /= p;
            parity ^= 1;
        }
    }
    if (n > 1) parity ^= 1;
    return parity ? -1 : 1;
}

inline int mobius(u64 n) {
    detail::require_positive(n, "mobius");
    int sign = 1;
    if (n % 2 == 0) {
        n /= 2;
        if (n % 2 == 0) return 0;
        sign = -sign;
    }
    for (u64 p = 3; p <= n / p; p += 2) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// q(n) = (-1)^(n-1).
inline int q_fn(u64 n) {
    detail::require_positive(n, "q");
    return (n & 1) ? 1 : -1;
}

inline int square_indicator(u64 n) {
    detail::require_positive(n, "square indicator");
    return is_square(n) ? 1 : 0;
}

inline int evaluate(ArithFn fn, u64 n) {
    return fn == ArithFn::liouville ? liouville(n) : mobius(n);
}

/// All primes p <= limit.
inline std::vector<std::uint32_t> primes_up_to(u64 limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

/// f(1..n) by a linear (smallest-prime-factor) sieve.
inline ArithFnTable sieve_table(ArithFn fn, u64 n) {
    detail::require_positive(n, "sieve_table upper bound");
    std::vector<std::int8_t> f(n + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(n + 1, false);
    f[1] = 1;
    for (u64 i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            f[i] = -1;
        }
        for (std::uint32_t p : primes) {
            u64 m = i * p;
            if (m > n) break;
            composite[m] = true;
            if (i % p == 0) {
                f[m] = fn == ArithFn::liouville ? static_cast<std::int8_t>(-f[i]) : std::int8_t{0};
                break;
            }
            f[m] = static_cast<std::int8_t>(-f[i]);
        }
    }
    f.erase(f.begin());
    return ArithFnTable{1, std::move(f)};
}

/// Segmented sieve for lambda or mu over arbitrary windows [lo, hi].
///
/// For each prime power p^k <= hi the entries divisible by p^k record one
/// more factor p. Whatever is left after dividing out the primes <= sqrt(hi)
/// is 1 or a single large prime.
class SegmentedSieve {
public:
    SegmentedSieve(ArithFn fn, u64 max_hi, std::size_t max_block = default_block_size)
        : fn_(fn), max_hi_(max_hi), max_block_(max_block), primes_(primes_up_to(isqrt(max_hi))) {
        if (max_block_ == 0) throw capacity_error("block size must be positive");
    }

    ArithFn fn() const { return fn_; }
    std::size_t max_block() const { return max_block_; }

    ArithFnTable block(u64 lo, u64 hi) {
        ArithFnTable out;
        out.lo = lo;
        fill(lo, hi, out.values);
        return out;
    }

    /// Writes f(lo..hi) into `out`, resized to hi - lo + 1.
    void fill(u64 lo, u64 hi, std::vector<std::int8_t>& out) {
        if (lo == 0 || lo > hi) throw domain_error("sieve block requires 1 <= lo <= hi");
        if (hi > max_hi_) throw domain_error("sieve block beyond configured upper limit");
        if (hi - lo >= max_block_)
            throw capacity_error("sieve block of " + std::to_string(hi - lo + 1) +
                                 " entries exceeds maximum " + std::to_string(max_block_));
        const std::size_t count = hi - lo + 1;
        prod_.assign(count, 1);
        out.assign(count, 0);  // parity (lambda) or sign (mu) bit
        if (fn_ == ArithFn::mobius) zero_.assign(count, 0);

        for (std::uint32_t p32 : primes_) {
            const u64 p = p32;
            if (p * p > hi) break;
            if (fn_ == ArithFn::liouville) {
                for (u64 pk = p;; pk *= p) {
                    for (u64 m = first_multiple(lo, pk); m <= hi; m += pk) {
                        out[m - lo] ^= 1;
                        prod_[m - lo] *= p;
                    }
                    if (pk > hi / p) break;
                }
            } else {
                for (u64 m = first_multiple(lo, p); m <= hi; m += p) {
                    out[m - lo] ^= 1;
                    prod_[m - lo] *= p;
                }
                const u64 p2 = p * p;
                for (u64 m = first_multiple(lo, p2); m <= hi; m += p2) zero_[m - lo] = 1;
            }
        }
        for (std::size_t i = 0; i < count; ++i) {
            std::int8_t bit = out[i];
            if (prod_[i] != lo + i) bit ^= 1;
            if (fn_ == ArithFn::mobius && zero_[i])
                out[i] = 0;
            else
                out[i] = bit ? std::int8_t{-1} : std::int8_t{1};
        }
    }

    /// Streams f over [lo, hi] in blocks of at most max_block entries,
    /// calling visit(first_index, span_of_values) per block.
    template <typename Visit>
    void for_each_block(u64 lo, u64 hi, Visit&& visit, std::size_t block = 0) {
        if (block == 0 || block > max_block_) block = std::min<std::size_t>(max_block_, 1 << 20);
        std::vector<std::int8_t> buf;
        for (u64 a = lo; a <= hi;) {
            u64 b = (hi - a >= block) ? a + block - 1 : hi;
            fill(a, b, buf);
            visit(a, std::span<const std::int8_t>(buf));
            if (b == hi) break;
            a = b + 1;
        }
    }

private:
    static u64 first_multiple(u64 lo, u64 d) { return (lo + d - 1) / d * d; }

    ArithFn fn_;
    u64 max_hi_;
    std::size_t max_block_;
    std::vector<std::uint32_t> primes_;
    std::vector<u64> prod_;
    std::vector<std::uint8_t> zero_;
};

/// lambda(lo..hi) for one block of at most `max_block` entries.
inline ArithFnTable sieve_liouville_block(u64 lo, u64 hi, std::size_t max_block = default_block_size) {
    if (lo == 0 || lo > hi) throw domain_error("sieve block requires 1 <= lo <= hi");
    if (hi - lo >= max_block) throw capacity_error("sieve block exceeds configured maximum");
    return SegmentedSieve(ArithFn::liouville, hi, max_block).block(lo, hi);
}

inline ArithFnTable sieve_mobius_block(u64 lo, u64 hi, std::size_t max_block = default_block_size) {
    if (lo == 0 || lo > hi) throw domain_error("sieve block requires 1 <= lo <= hi");
    if (hi - lo >= max_block) throw capacity_error("sieve block exceeds configured maximum");
    return SegmentedSieve(ArithFn::mobius, hi, max_block).block(lo, hi);
}

} // namespace liouville
