#pragma once

#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "liouville/a_spec.hpp"
#include "liouville/arith_core.hpp"
#include "liouville/errors.hpp"
#include "liouville/numeric.hpp"

namespace liouville {

using ConvTable = BasicTable<i64>;

/// A pair of tables over the same range [1, N].
struct ConvInput {
    const ArithFnTable& f;
    const ArithFnTable& g;
};

/// Samples fn(1..n) into an 8-bit table.
template <typename Fn>
ArithFnTable tabulate(u64 n, Fn&& fn) {
    std::vector<std::int8_t> v(n);
    for (u64 i = 1; i <= n; ++i) v[i - 1] = static_cast<std::int8_t>(fn(i));
    return ArithFnTable{1, std::move(v)};
}

/// (f * g)(n) for n <= N by enumerating multiples of each d with f(d) != 0.
/// O(N log N); every accumulation is overflow-checked.
template <typename T, typename U>
ConvTable convolve(const BasicTable<T>& f, const BasicTable<U>& g) {
    if (f.lo != 1 || g.lo != 1) throw domain_error("convolution tables must start at n = 1");
    if (f.size() != g.size()) throw domain_error("convolution tables must have equal length");
    const u64 n = f.size();
    std::vector<i64> out(n, 0);
    for (u64 d = 1; d <= n; ++d) {
        const i64 fd = static_cast<i64>(f(d));
        if (fd == 0) continue;
        for (u64 m = 1, dm = d; dm <= n; ++m, dm += d) {
            const i64 gm = static_cast<i64>(g(m));
            if (gm != 0) out[dm - 1] = checked_add(out[dm - 1], checked_mul(fd, gm));
        }
    }
    return ConvTable{1, std::move(out)};
}

/// Exact (f * g)(n), n <= N, for 8-bit inputs bounded by 2 in magnitude.
inline ConvTable convolve_prefix(const ConvInput& in) {
    if (in.f.empty()) throw domain_error("convolution needs N >= 1");
    for (const ArithFnTable* t : {&in.f, &in.g})
        for (std::int8_t v : t->values)
            if (v < -2 || v > 2) throw domain_error("convolution inputs must satisfy |value| <= 2");
    return convolve(in.f, in.g);
}

/// Real split points a, b of the hyperbola method with a*b = x.
///
/// Only the floors matter to the summation, so the split keeps them after
/// validating the product exactly.
class HyperbolaSplit {
public:
    /// a and b as exact rationals; throws contract_error unless a*b == x.
    static HyperbolaSplit rational(u64 x, Rational a, Rational b) {
        if (a.num == 0 || b.num == 0) throw contract_error("hyperbola split points must be positive");
        u128 lhs = static_cast<u128>(a.num) * b.num;
        u128 rhs = static_cast<u128>(x) * a.den * b.den;
        if (lhs != rhs)
            throw contract_error("hyperbola split requires a*b = x; got a = " + a.str() + ", b = " + b.str() +
                                 ", x = " + std::to_string(x));
        return HyperbolaSplit(x, a.floor(), b.floor());
    }

    /// a given, b = x / a.
    static HyperbolaSplit at(u64 x, Rational a) {
        if (a.num == 0) throw contract_error("hyperbola split points must be positive");
        return rational(x, a, Rational{x * a.den, a.num});
    }

    /// a = b = sqrt(x).
    static HyperbolaSplit symmetric(u64 x) {
        u64 r = isqrt(x);
        return HyperbolaSplit(x, r, r);
    }

    u64 x() const { return x_; }
    u64 floor_a() const { return floor_a_; }
    u64 floor_b() const { return floor_b_; }

private:
    HyperbolaSplit(u64 x, u64 fa, u64 fb) : x_(x), floor_a_(fa), floor_b_(fb) {}
    u64 x_, floor_a_, floor_b_;
};

/// sum_{n<=x} (f*g)(n) = sum_{n<=a} f(n) G(x/n) + sum_{n<=b} g(n) F(x/n) - F(a) G(b).
///
/// f, g map n -> value; F, G are summatory functions taking the floor of
/// their real argument.
template <typename Fn, typename FSum, typename Gn, typename GSum>
i64 hyperbola_sum(Fn&& f, FSum&& F, Gn&& g, GSum&& G, const HyperbolaSplit& split) {
    const u64 x = split.x();
    i64 total = 0;
    for (u64 n = 1; n <= split.floor_a(); ++n) {
        const i64 fn = static_cast<i64>(f(n));
        if (fn != 0) total = checked_add(total, checked_mul(fn, static_cast<i64>(G(x / n))));
    }
    for (u64 n = 1; n <= split.floor_b(); ++n) {
        const i64 gn = static_cast<i64>(g(n));
        if (gn != 0) total = checked_add(total, checked_mul(gn, static_cast<i64>(F(x / n))));
    }
    return checked_add(total, -checked_mul(static_cast<i64>(F(split.floor_a())),
                                           static_cast<i64>(G(split.floor_b()))));
}

/// Closed form of (lambda * q)(n): s(n) for odd n; for n = 2^k w with w odd,
/// zero unless w is a square, then -2 for odd k and 1 for even k >= 2.
inline int lambda_conv_q_closed(u64 n) {
    if (n == 0) throw domain_error("lambda * q is undefined at n = 0");
    const int k = std::countr_zero(n);
    const u64 w = n >> k;
    if (!is_square(w)) return 0;
    if (k == 0) return 1;
    return (k & 1) ? -2 : 1;
}

/// h = q * a over [1, N]; a must satisfy |a(n)| <= 1.
inline ConvTable conv_with_q(const ArithFnTable& a) {
    if (a.lo != 1) throw domain_error("conv_with_q needs a table starting at n = 1");
    for (u64 n = 1; n <= a.size(); ++n)
        if (std::abs(a(n)) > 1)
            throw hypothesis_error("conv_with_q requires |a(n)| <= 1; a(" + std::to_string(n) +
                                   ") = " + std::to_string(int{a(n)}));
    const u64 N = a.size();
    std::vector<i64> h(N, 0);
    for (u64 d = 1; d <= N; ++d) {
        const int ad = a(d);
        if (ad == 0) continue;
        for (u64 m = 1, dm = d; dm <= N; ++m, dm += d) h[dm - 1] += (m & 1) ? ad : -ad;
    }
    return ConvTable{1, std::move(h)};
}

/// Random access to h = q * a for an ASpec, computed one window at a time.
///
/// Windows are recomputed only when n leaves the current one, so monotone
/// sweeps in either direction cost O(block + support) per window.
class QConvolution {
public:
    explicit QConvolution(ASpec a, u64 block = u64{1} << 16) : a_(std::move(a)), block_(block) {}

    const ASpec& a() const { return a_; }

    i64 operator()(u64 n) {
        if (n == 0) throw domain_error("h is undefined at n = 0");
        if (n < lo_ || n >= lo_ + window_.size()) load(n);
        return window_[n - lo_];
    }

    /// h(lo..hi) written into out.
    void fill(u64 lo, u64 hi, std::vector<i64>& out) const {
        out.assign(hi - lo + 1, 0);
        a_.for_each_nonzero(hi, [&](u64 d, int ad) {
            u64 m = (lo + d - 1) / d;
            for (u64 dm = m * d; dm <= hi; dm += d, ++m) out[dm - lo] += (m & 1) ? ad : -ad;
        });
    }

private:
    void load(u64 n) {
        const u64 start = n > block_ / 2 ? n - block_ / 2 : 1;
        lo_ = start;
        fill(start, start + block_ - 1, window_);
    }

    ASpec a_;
    u64 block_;
    u64 lo_ = 1;
    std::vector<i64> window_;
};

} // namespace liouville
