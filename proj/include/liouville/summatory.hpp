#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "liouville/arith_core.hpp"
#include "liouville/errors.hpp"
#include "liouville/numeric.hpp"
#include "liouville/stepquad.hpp"

namespace liouville {

/// F(0), F(1), ..., F(N) for F(n) = sum_{k<=n} f(k).
class PrefixTable {
public:
    PrefixTable() : sums_{0} {}

    explicit PrefixTable(const ArithFnTable& f) {
        if (f.lo != 1) throw domain_error("prefix table needs f starting at n = 1");
        sums_.resize(f.size() + 1);
        sums_[0] = 0;
        for (std::size_t i = 0; i < f.size(); ++i) sums_[i + 1] = sums_[i] + f.values[i];
    }

    static PrefixTable sieved(ArithFn fn, u64 n) { return PrefixTable(sieve_table(fn, n)); }

    u64 limit() const { return sums_.size() - 1; }
    i64 operator()(u64 n) const { return sums_[n]; }
    i64 at(u64 n) const {
        if (n > limit()) throw domain_error("prefix table covers n <= " + std::to_string(limit()));
        return sums_[n];
    }

private:
    std::vector<i64> sums_;
};

/// L: sum_{n<=x} L(x/n) = floor(sqrt(x)).
struct LiouvilleSummatory {
    static constexpr ArithFn fn = ArithFn::liouville;
    static i64 quotient_identity(u64 v) { return static_cast<i64>(isqrt(v)); }
};

/// M: sum_{n<=x} M(x/n) = 1.
struct MertensSummatory {
    static constexpr ArithFn fn = ArithFn::mobius;
    static i64 quotient_identity(u64 v) { return v >= 1 ? 1 : 0; }
};

inline constexpr std::size_t default_memo_budget = std::size_t{1} << 22;

/// Dense threshold giving the x^{2/3} running time, at least 1000.
inline u64 recommended_threshold(u64 x) {
    u64 c = icbrt(x);
    return std::max<u64>(1000, c * c);
}

/// Summatory values with a dense prefix table up to `threshold` and a
/// functional memo above it, keyed by the quotients floor(x/n).
///
/// Above the threshold values come from
///   F(v) = identity(v) - sum_{2<=n<=v} F(floor(v/n)),
/// summed over blocks of n sharing one quotient. Memo entries are written
/// once and never change, so concurrent readers only ever observe final
/// values; racing writers at worst duplicate work.
template <typename Kind>
class BasicSummatoryCache {
public:
    explicit BasicSummatoryCache(u64 threshold, std::size_t memo_budget = default_memo_budget)
        : dense_(PrefixTable::sieved(Kind::fn, std::max<u64>(threshold, 1))), memo_budget_(memo_budget) {}

    static BasicSummatoryCache for_max(u64 x) { return BasicSummatoryCache(recommended_threshold(x)); }

    u64 threshold() const { return dense_.limit(); }
    const PrefixTable& dense() const { return dense_; }

    std::size_t memo_size() const {
        std::shared_lock lock(mutex_);
        return memo_.size();
    }

    i64 operator()(u64 x) {
        if (x <= dense_.limit()) return dense_(x);
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(x); it != memo_.end()) return it->second;
        }
        const i64 value = compute(x);
        insert(x, value);
        return value;
    }

    /// Installs a known value, e.g. from a checkpoint file. Values inside the
    /// dense range are checked instead of stored.
    void seed(u64 x, i64 value) {
        if (x <= dense_.limit()) {
            if (dense_(x) != value)
                throw domain_error("seed value for x = " + std::to_string(x) + " disagrees with sieve");
            return;
        }
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(x); it != memo_.end()) {
            if (it->second != value)
                throw domain_error("seed value for x = " + std::to_string(x) + " disagrees with memo");
            return;
        }
        lock.unlock();
        insert(x, value);
    }

private:
    i64 compute(u64 v) {
        i64 s = Kind::quotient_identity(v);
        for (u64 n = 2; n <= v;) {
            const u64 q = v / n;
            const u64 n_hi = v / q;
            s -= static_cast<i64>(n_hi - n + 1) * (*this)(q);
            n = n_hi + 1;
        }
        return s;
    }

    void insert(u64 x, i64 value) {
        std::unique_lock lock(mutex_);
        if (memo_.size() >= memo_budget_ && !memo_.contains(x))
            throw capacity_error("summatory memo budget of " + std::to_string(memo_budget_) + " entries exhausted");
        memo_.emplace(x, value);
    }

    PrefixTable dense_;
    std::size_t memo_budget_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<u64, i64> memo_;
};

using SummatoryCache = BasicSummatoryCache<LiouvilleSummatory>;
using MertensCache = BasicSummatoryCache<MertensSummatory>;

/// Streams a summatory function F(n) for n = 1, 2, ... up to a fixed limit,
/// sieving one block at a time. Calls must use nondecreasing n.
class SummatoryStream {
public:
    SummatoryStream(ArithFn fn, u64 limit, std::size_t block = std::size_t{1} << 20)
        : sieve_(fn, std::max<u64>(limit, 1), std::max<std::size_t>(block, 1)), limit_(limit), block_(block) {}

    i64 operator()(u64 n) {
        if (n < pos_) throw domain_error("summatory stream only moves forward");
        if (n > limit_) throw domain_error("summatory stream limit is " + std::to_string(limit_));
        while (pos_ < n) {
            if (pos_ + 1 > buf_hi_) refill();
            ++pos_;
            sum_ += buf_[pos_ - buf_lo_];
        }
        return sum_;
    }

    /// Calls visit(n, f(n), F(n)) for n = 1..limit.
    template <typename Visit>
    void for_each(Visit&& visit) {
        sieve_.for_each_block(1, limit_, [&](u64 lo, std::span<const std::int8_t> vals) {
            for (std::size_t i = 0; i < vals.size(); ++i) {
                sum_ += vals[i];
                visit(lo + i, static_cast<int>(vals[i]), sum_);
            }
        }, block_);
        pos_ = limit_;
    }

private:
    void refill() {
        buf_lo_ = pos_ + 1;
        buf_hi_ = std::min<u64>(limit_, pos_ + block_);
        sieve_.fill(buf_lo_, buf_hi_, buf_);
    }

    SegmentedSieve sieve_;
    u64 limit_;
    std::size_t block_;
    u64 pos_ = 0;
    i64 sum_ = 0;
    u64 buf_lo_ = 1;
    u64 buf_hi_ = 0;
    std::vector<std::int8_t> buf_;
};

inline i64 sieved_summatory(ArithFn fn, u64 x) {
    if (x == 0) throw domain_error("summatory function needs x >= 1");
    i64 total = 0;
    SegmentedSieve sieve(fn, x);
    sieve.for_each_block(1, x, [&](u64, std::span<const std::int8_t> vals) {
        for (std::int8_t v : vals) total += v;
    });
    return total;
}

/// L(x) by streaming the block sieve.
inline i64 L_sieved(u64 x) { return sieved_summatory(ArithFn::liouville, x); }
inline i64 M_sieved(u64 x) { return sieved_summatory(ArithFn::mobius, x); }

inline i64 L_sublinear(u64 x, SummatoryCache& cache) {
    if (x == 0) throw domain_error("L needs x >= 1");
    return cache(x);
}

inline i64 M_sublinear(u64 x, MertensCache& cache) {
    if (x == 0) throw domain_error("M needs x >= 1");
    return cache(x);
}

/// Q(x) = sum_{n<=x} (-1)^{n-1}: 1 when floor(x) is odd, else 0.
inline int Q_closed(u64 x) { return static_cast<int>(x & 1); }
inline int Q_closed(double x) {
    if (!(x >= 0.0)) throw domain_error("Q needs x >= 0");
    return Q_closed(static_cast<u64>(std::floor(x)));
}

/// H(x) = sum_{n<=x} a(n) Q(x/n).
inline i64 H_of(const ArithFnTable& a, u64 x) {
    if (a.lo != 1 || (x > 0 && !a.covers(x)))
        throw domain_error("H_of needs a table covering [1, " + std::to_string(x) + "]");
    i64 h = 0;
    for (u64 n = 1; n <= x; ++n)
        if (a(n) != 0 && Q_closed(x / n)) h += a(n);
    return h;
}

/// Calls visit(q, n_first, n_last) for each maximal run n_first..n_last of
/// [n_lo, n_hi] on which floor(x/n) = q.
template <typename Visit>
void for_each_quotient_block(u64 x, u64 n_lo, u64 n_hi, Visit&& visit) {
    n_hi = std::min(n_hi, x);
    for (u64 n = std::max<u64>(n_lo, 1); n <= n_hi;) {
        const u64 q = x / n;
        const u64 last = std::min(x / q, n_hi);
        visit(q, n, last);
        n = last + 1;
    }
}

enum class QuotientRange { lower, upper, full };

/// sum of F(floor(x/n)) over n <= sqrt(x) (lower), sqrt(x) < n <= x (upper),
/// or both, with one evaluation of F per distinct quotient.
template <typename Summatory>
i64 quotient_sum(u64 x, QuotientRange range, Summatory&& F) {
    if (x == 0) throw domain_error("quotient sums need x >= 1");
    const u64 r = isqrt(x);
    u64 lo = 1, hi = x;
    if (range == QuotientRange::lower) hi = r;
    if (range == QuotientRange::upper) lo = r + 1;
    i64 total = 0;
    for_each_quotient_block(x, lo, hi, [&](u64 q, u64 first, u64 last) {
        total += static_cast<i64>(last - first + 1) * static_cast<i64>(F(q));
    });
    return total;
}

inline i64 quotient_sum_L(u64 x, QuotientRange range, SummatoryCache& cache) {
    return quotient_sum(x, range, [&](u64 q) { return cache(q); });
}

/// sum_{n<=x} a(n) f(n) = A(x) f(x) - integral_1^x A(t) f'(t) dt.
///
/// A is a step function, so each piece integrates exactly to
/// A(n) (f(b) - f(a)); `f_deriv` is only probed for finiteness.
template <typename APrefix, typename F, typename FDeriv>
double abel_sum(APrefix&& A, F&& f, FDeriv&& f_deriv, double x) {
    if (!(x >= 1.0)) throw domain_error("abel_sum needs x >= 1");
    auto finite = [](double v, const char* what) {
        if (!std::isfinite(v)) throw numeric_error(std::string("non-finite ") + what);
        return v;
    };
    const auto fx = finite(f(x), "weight value");
    finite(f_deriv(x), "weight derivative");
    const double boundary = static_cast<double>(A(static_cast<u64>(std::floor(x)))) * fx;
    const double integral = integrate_floor_step(1.0, x, A, [&](double a, double b) {
        finite(f_deriv(a), "weight derivative");
        return finite(f(b), "weight value") - finite(f(a), "weight value");
    });
    return boundary - integral;
}

namespace detail {
inline double inv_power(u64 n, double s) {
    const double d = static_cast<double>(n);
    if (s == 2.0) return 1.0 / (d * d);
    if (s == 1.5) return 1.0 / (d * std::sqrt(d));
    return std::pow(d, -s);
}
} // namespace detail

/// sum_{n<=x} L(n) / n^s at each x in the increasing list `xs`, in one pass.
inline std::vector<double> weighted_partial_at(double s_exp, std::span<const u64> xs) {
    if (!(s_exp > 0.0)) throw domain_error("weighted_partial needs s > 0");
    std::vector<double> out;
    if (xs.empty()) return out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == 0 || (i > 0 && xs[i] <= xs[i - 1])) throw domain_error("xs must be positive and increasing");
    out.reserve(xs.size());
    CompensatedSum sum;
    std::size_t next = 0;
    SummatoryStream(ArithFn::liouville, xs.back()).for_each([&](u64 n, int, i64 L) {
        if (L != 0) sum += static_cast<double>(L) * detail::inv_power(n, s_exp);
        if (n == xs[next]) {
            out.push_back(sum.value());
            ++next;
        }
    });
    return out;
}

inline double weighted_partial(double s_exp, u64 x) {
    if (x == 0) throw domain_error("weighted_partial needs x >= 1");
    const u64 xs[] = {x};
    return weighted_partial_at(s_exp, xs).front();
}

/// Truncated tail sum_{x<n<=X} L(n)/n^2.
///
/// `truncation_bound` estimates the neglected sum_{n>X} by assuming
/// |L(n)| <= C sqrt(n) beyond X with C the largest |L(n)|/sqrt(n) seen up to
/// X. That assumption is not proven, so the bound is never rigorous.
struct TailEstimate {
    double value = 0.0;
    double truncation_bound = 0.0;
    bool rigorous = false;
};

inline std::vector<TailEstimate> tail_L_over_n2_at(std::span<const u64> xs, u64 x_max) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0 || (i > 0 && xs[i] <= xs[i - 1])) throw domain_error("xs must be positive and increasing");
        if (x_max <= xs[i]) throw domain_error("tail sum needs X_max > x");
    }
    std::vector<double> partial;
    partial.reserve(xs.size());
    CompensatedSum sum;
    double c_max = 0.0;
    std::size_t next = 0;
    SummatoryStream(ArithFn::liouville, x_max).for_each([&](u64 n, int, i64 L) {
        if (next < xs.size() && n - 1 == xs[next]) {
            partial.push_back(sum.value());
            ++next;
        }
        if (L != 0) sum += static_cast<double>(L) * detail::inv_power(n, 2.0);
        c_max = std::max(c_max, std::abs(static_cast<double>(L)) / std::sqrt(static_cast<double>(n)));
    });
    const double total = sum.value();
    const double X = static_cast<double>(x_max);
    const double bound = c_max * (2.0 / std::sqrt(X) + std::pow(X, -1.5));
    std::vector<TailEstimate> out;
    for (double p : partial) out.push_back(TailEstimate{total - p, bound, false});
    return out;
}

inline TailEstimate tail_L_over_n2(u64 x, u64 x_max) {
    const u64 xs[] = {x};
    return tail_L_over_n2_at(xs, x_max).front();
}

/// L values at chosen points as CSV `x,L`.
inline void write_checkpoint(const std::filesystem::path& path, const std::map<u64, i64>& values) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + path.string());
    out << "x,L\n";
    for (auto [x, L] : values) out << x << ',' << L << '\n';
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

inline std::map<u64, i64> read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open checkpoint " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "x,L") throw std::runtime_error(path.string() + ": expected header x,L");
    std::map<u64, i64> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error(path.string() + ": malformed row '" + line + "'");
        values[std::stoull(line.substr(0, comma))] = std::stoll(line.substr(comma + 1));
    }
    return values;
}

} // namespace liouville
