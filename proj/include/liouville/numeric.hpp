#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <string>

#include "liouville/errors.hpp"

namespace liouville {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

/// Floor of the square root, exact for every value of T.
///
/// A floating-point estimate seeds Newton's iteration; the result is then
/// corrected so that r*r <= n < (r+1)*(r+1) holds in integer arithmetic.
template <std::unsigned_integral T>
constexpr T isqrt(T n) {
    if (n < 2) return n;
    T r = static_cast<T>(std::sqrt(static_cast<long double>(n)));
    if (r == 0) r = 1;
    for (int i = 0; i < 8; ++i) {
        T next = static_cast<T>((r + n / r) / 2);
        if (next == r || next == r + 1) break;
        r = next;
    }
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

constexpr u128 isqrt(u128 n) {
    if (n < 2) return n;
    u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    if (r == 0) r = 1;
    for (int i = 0; i < 8; ++i) {
        u128 next = (r + n / r) / 2;
        if (next == r || next == r + 1) break;
        r = next;
    }
    while (r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

/// Floor of the cube root.
constexpr u64 icbrt(u64 n) {
    u64 r = static_cast<u64>(std::cbrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

constexpr bool is_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

/// Positive rational num/den, not necessarily reduced. Equality and ordering
/// compare values, so 9/6 == 3/2.
struct Rational {
    u64 num = 0;
    u64 den = 1;

    constexpr Rational() = default;
    constexpr Rational(u64 n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
    constexpr Rational(u64 n, u64 d) : num(n), den(d) {
        if (d == 0) throw domain_error("rational with zero denominator");
    }

    constexpr u64 floor() const { return num / den; }
    constexpr u64 ceil() const { return num / den + (num % den != 0); }
    constexpr bool is_integer() const { return num % den == 0; }
    constexpr double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    constexpr Rational reduced() const {
        u64 g = std::gcd(num, den);
        return g == 0 ? *this : Rational{num / g, den / g};
    }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return static_cast<u128>(a.num) * b.den == static_cast<u128>(b.num) * a.den;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<u128>(a.num) * b.den <=> static_cast<u128>(b.num) * a.den;
    }

    std::string str() const {
        Rational r = reduced();
        return r.den == 1 ? std::to_string(r.num)
                          : std::to_string(r.num) + "/" + std::to_string(r.den);
    }
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double v) {
        add(v);
        return *this;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_error("64-bit accumulation overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_error("64-bit product overflow");
    return r;
}

} // namespace liouville
