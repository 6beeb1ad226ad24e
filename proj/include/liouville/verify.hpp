#pragma once

// Exact-identity suites behind `liouville verify`.

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "liouville/a_spec.hpp"
#include "liouville/arith_core.hpp"
#include "liouville/dirichlet.hpp"
#include "liouville/errors.hpp"
#include "liouville/experiments.hpp"
#include "liouville/summatory.hpp"

namespace liouville {

struct VerifyResult {
    u64 passed = 0;
    u64 total = 0;
    std::optional<u64> failed_at;
    std::string detail;

    bool ok() const { return !failed_at && passed == total; }

    std::string summary() const {
        if (ok()) return "PASS " + std::to_string(passed) + "/" + std::to_string(total);
        std::string s = "FAIL at x=" + std::to_string(failed_at.value_or(0));
        if (!detail.empty()) s += " (" + detail + ")";
        return s;
    }

    /// Records one check; returns false once a failure has been recorded.
    bool check(bool good, u64 x, const std::string& what = {}) {
        ++total;
        if (good) {
            ++passed;
            return true;
        }
        failed_at = x;
        detail = what;
        return false;
    }
};

/// Draws from [lo, hi] with a fixed mapping so runs agree across platforms.
inline u64 draw(std::mt19937_64& rng, u64 lo, u64 hi) { return lo + rng() % (hi - lo + 1); }

/// sum_{n<=x} L(floor(x/n)) = floor(sqrt x) for every x <= n_max, then for
/// 100 seeded x up to n_max^2 (at most 10^10) through the sublinear path.
inline VerifyResult verify_identity(u64 n_max, u64 seed) {
    VerifyResult r;
    const PrefixTable L = PrefixTable::sieved(ArithFn::liouville, n_max);
    for (u64 x = 1; x <= n_max; ++x) {
        const i64 lhs = quotient_sum(x, QuotientRange::full, [&](u64 v) { return L(v); });
        if (!r.check(lhs == static_cast<i64>(isqrt(x)), x, "lhs " + std::to_string(lhs))) return r;
    }
    const u64 hi = std::min<u64>(n_max > (u64{1} << 32) ? ~u64{0} : n_max * n_max, 10'000'000'000ULL);
    if (hi <= n_max) return r;
    std::mt19937_64 rng(seed);
    SummatoryCache cache(recommended_threshold(hi));
    for (int i = 0; i < 100; ++i) {
        const u64 x = draw(rng, n_max + 1, hi);
        const i64 lhs = quotient_sum_L(x, QuotientRange::full, cache);
        if (!r.check(lhs == static_cast<i64>(isqrt(x)), x, "lhs " + std::to_string(lhs))) return r;
    }
    return r;
}

/// Closed form of lambda * q against the divisor-sum convolution, n <= n_max.
inline VerifyResult verify_conv_closed_form(u64 n_max) {
    VerifyResult r;
    const ConvTable direct = convolve(sieve_table(ArithFn::liouville, n_max), tabulate(n_max, q_fn));
    for (u64 n = 1; n <= n_max; ++n) {
        const int closed = lambda_conv_q_closed(n);
        if (!r.check(closed == direct(n), n,
                     "closed " + std::to_string(closed) + ", divisor sum " + std::to_string(direct(n))))
            return r;
    }
    return r;
}

/// Random f, g with values in {-1, 0, 1}: the three-term hyperbola formula
/// against the convolution prefix sum, for splits a = 1, floor(sqrt x), x.
inline VerifyResult verify_hyperbola(u64 n_max, u64 seed, int pairs = 50) {
    VerifyResult r;
    std::mt19937_64 rng(seed);
    for (int p = 0; p < pairs; ++p) {
        std::vector<std::int8_t> fv(n_max), gv(n_max);
        for (auto& v : fv) v = static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1);
        for (auto& v : gv) v = static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1);
        const ArithFnTable f(1, std::move(fv)), g(1, std::move(gv));
        const PrefixTable F(f), G(g);
        const ConvTable fg = convolve(f, g);
        std::vector<i64> direct(n_max + 1, 0);
        for (u64 n = 1; n <= n_max; ++n) direct[n] = direct[n - 1] + fg(n);

        const u64 x = draw(rng, 1, n_max);
        for (u64 a : {u64{1}, isqrt(x), x}) {
            const auto split = HyperbolaSplit::rational(x, Rational{a}, Rational{x, a});
            const i64 got = hyperbola_sum([&](u64 n) { return f(n); }, F, [&](u64 n) { return g(n); }, G, split);
            if (!r.check(got == direct[x], x,
                         "split a=" + std::to_string(a) + ": " + std::to_string(got) + " vs " +
                             std::to_string(direct[x])))
                return r;
        }
    }
    return r;
}

/// Partial summation of lambda(n) n^{-s} for s in {1, 3/2, 2} against the
/// direct sum, at every integer x <= n_max and at x + 1/2.
inline VerifyResult verify_abel(u64 n_max, double tolerance = 1e-10) {
    VerifyResult r;
    const ArithFnTable lam = sieve_table(ArithFn::liouville, n_max + 1);
    const PrefixTable L(lam);
    for (double s : {1.0, 1.5, 2.0}) {
        auto f = [s](double t) { return std::pow(t, -s); };
        auto fd = [s](double t) { return -s * std::pow(t, -s - 1.0); };
        CompensatedSum direct;
        for (u64 x = 1; x <= n_max; ++x) {
            direct += lam(x) * std::pow(static_cast<double>(x), -s);
            for (double xt : {static_cast<double>(x), static_cast<double>(x) + 0.5}) {
                const double got = abel_sum(L, f, fd, xt);
                if (!r.check(std::abs(got - direct.value()) <= tolerance, x,
                             "s=" + std::to_string(s) + ": " + std::to_string(got)))
                    return r;
            }
        }
    }
    return r;
}

/// The square-sum identity for x <= n_max and the zero pattern of q * s.
inline VerifyResult verify_square_sums(u64 n_max) {
    VerifyResult r;
    for (u64 x = 1; x <= n_max; ++x)
        if (!r.check(square_sum_lhs(x) == square_sum_rhs(x), x, "square-sum identity")) return r;
    std::vector<i64> h;
    QConvolution(ASpec::square()).fill(1, n_max, h);
    for (u64 n = 1; n <= n_max; ++n)
        if (!r.check(h[n - 1] != 0 || n % 4 == 0, n, "(q*s)(n) = 0 with 4 not dividing n")) return r;
    return r;
}

inline constexpr std::string_view verify_suites[] = {"identity", "conv-closed-form", "hyperbola", "abel", "remark2"};

inline VerifyResult run_verify(std::string_view suite, u64 n_max, u64 seed) {
    if (n_max == 0) throw domain_error("--n-max must be positive");
    if (suite == "identity") return verify_identity(n_max, seed);
    if (suite == "conv-closed-form") return verify_conv_closed_form(n_max);
    if (suite == "hyperbola") return verify_hyperbola(n_max, seed);
    if (suite == "abel") return verify_abel(n_max);
    if (suite == "remark2") return verify_square_sums(n_max);
    throw domain_error("unknown verify suite '" + std::string(suite) + "'");
}

} // namespace liouville
