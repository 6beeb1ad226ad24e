#pragma once

// Experiment runners. Unconditional statements are asserted and throw
// assertion_failure when violated; statements that depend on the growth
// hypothesis for sum_{n<=sqrt(x)} L(x/n) are only reported and fitted.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liouville/a_spec.hpp"
#include "liouville/arith_core.hpp"
#include "liouville/dirichlet.hpp"
#include "liouville/errors.hpp"
#include "liouville/regression.hpp"
#include "liouville/stepquad.hpp"
#include "liouville/summatory.hpp"
#include "liouville/zeta.hpp"

namespace liouville {

struct GridSpec {
    std::vector<u64> xs;
    double epsilon = 0.25;
    double delta = 0.25;

    /// 10^lo_exp, 10^(lo_exp+1), ..., 10^hi_exp.
    static GridSpec decades(int lo_exp, int hi_exp) {
        GridSpec g;
        u64 p = 1;
        for (int e = 0; e <= hi_exp; ++e) {
            if (e >= lo_exp) g.xs.push_back(p);
            p *= 10;
        }
        return g;
    }

    void validate() const {
        if (xs.empty()) throw domain_error("grid is empty");
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] < 4) throw domain_error("grid points must be >= 4");
            if (i > 0 && xs[i] <= xs[i - 1]) throw domain_error("grid must be strictly increasing");
        }
        if (!(epsilon >= 0.0)) throw domain_error("epsilon must be >= 0");
        if (!(delta > 0.0)) throw domain_error("delta must be > 0");
    }

    u64 max() const { return xs.back(); }
};

enum class Tier { unconditional, conditional_on_m };

inline std::string_view to_string(Tier t) {
    return t == Tier::unconditional ? "unconditional" : "conditional-on-m";
}

enum class ClaimId {
    lower_quotient_sum,
    small_range_integral,
    upper_quotient_sum,
    quotient_residual,
    residual_limit_shift,
    tail_sum,
    tail_bound,
    weighted_partial,
    weighted_integral,
    sum_integral_gap,
    h_weighted_integral,
    h_weighted_sum,
    h_max,
    mobius_integral,
    sqrt_floor_sum,
    sqrt_floor_main,
    sqrt_floor_diff,
    square_sum_identity,
    square_integral,
    square_conv_density,
    zeta_ratio,
};

inline std::string_view to_string(ClaimId id) {
    switch (id) {
    case ClaimId::lower_quotient_sum: return "m";
    case ClaimId::small_range_integral: return "en1";
    case ClaimId::upper_quotient_sum: return "lemma-a";
    case ClaimId::quotient_residual: return "lemma-b";
    case ClaimId::residual_limit_shift: return "lemma-b-limits";
    case ClaimId::tail_sum: return "lemma-c";
    case ClaimId::tail_bound: return "lemma-c-bound";
    case ClaimId::weighted_partial: return "lemma-d";
    case ClaimId::weighted_integral: return "thm-f";
    case ClaimId::sum_integral_gap: return "estimate-diff";
    case ClaimId::h_weighted_integral: return "thm2";
    case ClaimId::h_weighted_sum: return "thm2-sum";
    case ClaimId::h_max: return "h-max";
    case ClaimId::mobius_integral: return "mobius";
    case ClaimId::sqrt_floor_sum: return "remark1";
    case ClaimId::sqrt_floor_main: return "remark1-main";
    case ClaimId::sqrt_floor_diff: return "remark1-diff";
    case ClaimId::square_sum_identity: return "remark2-identity";
    case ClaimId::square_integral: return "remark2-integral";
    case ClaimId::square_conv_density: return "remark2-density";
    case ClaimId::zeta_ratio: return "zeta";
    }
    return "?";
}

/// One reported value. scaled = raw / (x^scale_exp * (ln x)^log_power).
struct ClaimReport {
    ClaimId claim;
    u64 x;
    double raw;
    double scale_exp;
    int log_power;
    double scaled;
    Tier tier;
};

inline ClaimReport make_report(ClaimId id, u64 x, double raw, double scale_exp, Tier tier, int log_power = 0) {
    const double xd = static_cast<double>(x);
    double denom = std::pow(xd, scale_exp);
    if (log_power != 0) denom *= std::pow(std::log(xd), log_power);
    const double scaled = raw / denom;
    if (!std::isfinite(scaled))
        throw numeric_error("non-finite scaled value for " + std::string(to_string(id)) + " at x = " +
                            std::to_string(x));
    return ClaimReport{id, x, raw, scale_exp, log_power, scaled, tier};
}

struct ClaimRun {
    ClaimRun() = default;
    explicit ClaimRun(std::string run_name) : name(std::move(run_name)) {}

    std::string name;
    std::vector<ClaimReport> rows;
    ClaimId fit_claim = ClaimId::lower_quotient_sum;
    std::optional<RegressionFit> fit;
    std::size_t fit_dropped_zeros = 0;

    std::vector<const ClaimReport*> rows_for(ClaimId id) const {
        std::vector<const ClaimReport*> out;
        for (const auto& r : rows)
            if (r.claim == id) out.push_back(&r);
        return out;
    }

    /// Rows ordered by x, then by claim id.
    void canonicalize() {
        std::stable_sort(rows.begin(), rows.end(), [](const ClaimReport& a, const ClaimReport& b) {
            return a.x != b.x ? a.x < b.x : static_cast<int>(a.claim) < static_cast<int>(b.claim);
        });
    }

    /// Fits log|raw| against log x over the rows of `id`.
    void fit_rows(ClaimId id) {
        fit_claim = id;
        std::vector<std::pair<double, double>> pts;
        for (const auto* r : rows_for(id)) pts.emplace_back(static_cast<double>(r->x), r->raw);
        fit_dropped_zeros = static_cast<std::size_t>(
            std::count_if(pts.begin(), pts.end(), [](const auto& p) { return p.second == 0.0; }));
        try {
            fit = fit_exponent(pts);
        } catch (const domain_error&) {
            fit.reset();
        }
    }
};

/// Summatory caches shared by the runners of one grid.
class Workspace {
public:
    explicit Workspace(u64 x_max)
        : x_max_(x_max), L_(recommended_threshold(x_max)), M_(recommended_threshold(x_max)) {}

    u64 x_max() const { return x_max_; }
    SummatoryCache& L() { return L_; }
    MertensCache& M() { return M_; }

private:
    u64 x_max_;
    SummatoryCache L_;
    MertensCache M_;
};

namespace detail {
inline std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
} // namespace detail

// ---------------------------------------------------------------------------
// Conditional tier: quotient sums and the integrals they control.

inline ClaimRun run_lower_quotient_sum(const GridSpec& grid, Workspace& ws) {
    grid.validate();
    ClaimRun run{"m"};
    for (u64 x : grid.xs)
        run.rows.push_back(make_report(ClaimId::lower_quotient_sum, x,
                                       static_cast<double>(quotient_sum_L(x, QuotientRange::lower, ws.L())),
                                       0.75, Tier::conditional_on_m));
    run.fit_rows(ClaimId::lower_quotient_sum);
    return run;
}

inline ClaimRun run_upper_quotient_sum(const GridSpec& grid, Workspace& ws) {
    grid.validate();
    ClaimRun run{"lemma-a"};
    for (u64 x : grid.xs)
        run.rows.push_back(make_report(ClaimId::upper_quotient_sum, x,
                                       static_cast<double>(quotient_sum_L(x, QuotientRange::upper, ws.L())),
                                       0.75, Tier::conditional_on_m));
    run.fit_rows(ClaimId::upper_quotient_sum);
    return run;
}

/// integral_1^{sqrt(x)} L(t)/t^2 dt.
inline double small_range_integral(u64 x, SummatoryCache& L) {
    return integrate_L_over_power(std::sqrt(static_cast<double>(x)), 1.0, [&](u64 n) { return L(n); });
}

inline ClaimRun run_small_range_integral(const GridSpec& grid, Workspace& ws) {
    grid.validate();
    ClaimRun run{"en1"};
    for (u64 x : grid.xs)
        run.rows.push_back(make_report(ClaimId::small_range_integral, x, small_range_integral(x, ws.L()), -0.25, Tier::conditional_on_m));
    run.fit_rows(ClaimId::small_range_integral);
    return run;
}

struct QuotientResidualTerms {
    i64 sum = 0;               ///< sum_{sqrt(x)<n<=x} L(x/n)
    double integral = 0.0;     ///< integral_{sqrt(x)}^{x} L(x/t) dt
    double integral_m = 0.0;   ///< integral_{floor(sqrt x)+1}^{floor(x)+1} L(x/t) dt
    double residual() const { return std::abs(static_cast<double>(sum) - integral); }
};

inline QuotientResidualTerms quotient_residual_terms(u64 x, SummatoryCache& L) {
    QuotientResidualTerms t;
    auto Lf = [&](u64 n) { return L(n); };
    t.sum = quotient_sum(x, QuotientRange::upper, Lf);
    t.integral = integrate_L_quotient_form(x, Lf);
    t.integral_m = integrate_L_quotient_form(x, Point{isqrt(x) + 1}, Point{x + 1}, Lf);
    return t;
}

/// Asserts |sum - integral| <= residual_bound * sqrt(x).
inline ClaimRun run_quotient_residual(const GridSpec& grid, Workspace& ws, double residual_bound = 4.0) {
    grid.validate();
    ClaimRun run{"lemma-b"};
    for (u64 x : grid.xs) {
        const QuotientResidualTerms t = quotient_residual_terms(x, ws.L());
        const auto row = make_report(ClaimId::quotient_residual, x, t.residual(), 0.5, Tier::unconditional);
        run.rows.push_back(row);
        run.rows.push_back(
            make_report(ClaimId::residual_limit_shift, x, t.integral_m - t.integral, 0.5, Tier::unconditional));
        if (row.scaled > residual_bound)
            throw assertion_failure("lemma-b residual exceeds " + detail::fmt_double(residual_bound) +
                                    "*sqrt(x) at x = " + std::to_string(x) + ": sum = " + std::to_string(t.sum) +
                                    ", integral = " + detail::fmt_double(t.integral));
    }
    run.fit_rows(ClaimId::quotient_residual);
    return run;
}

/// Tail sums truncated at the largest grid point, which yields the bound row.
inline ClaimRun run_tail_sums(const GridSpec& grid) {
    grid.validate();
    ClaimRun run{"lemma-c"};
    const u64 x_max = grid.max();
    std::vector<u64> xs(grid.xs.begin(), grid.xs.end() - 1);
    if (!xs.empty()) {
        const auto tails = tail_L_over_n2_at(xs, x_max);
        for (std::size_t i = 0; i < xs.size(); ++i)
            run.rows.push_back(make_report(ClaimId::tail_sum, xs[i], tails[i].value, -0.5, Tier::conditional_on_m));
        run.rows.push_back(
            make_report(ClaimId::tail_bound, x_max, tails.front().truncation_bound, 0.0, Tier::conditional_on_m));
    }
    run.fit_rows(ClaimId::tail_sum);
    return run;
}

/// L_{3/2}(x) against log x, plus the convergence study at exponent 3/2 + delta
/// comparing the sum with the matching integral of L(t).
inline ClaimRun run_weighted_partials(const GridSpec& grid) {
    grid.validate();
    ClaimRun run{"lemma-d"};
    const auto l32 = weighted_partial_at(1.5, grid.xs);
    const auto l32d = weighted_partial_at(1.5 + grid.delta, grid.xs);
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        const u64 x = grid.xs[i];
        run.rows.push_back(make_report(ClaimId::weighted_partial, x, l32[i], 0.0, Tier::conditional_on_m, 1));
        SummatoryStream L(ArithFn::liouville, x);
        const double integral = integrate_L_over_power(static_cast<double>(x), 0.5 + grid.delta, L);
        run.rows.push_back(make_report(ClaimId::weighted_integral, x, integral, 0.0, Tier::conditional_on_m));
        run.rows.push_back(make_report(ClaimId::sum_integral_gap, x, l32d[i] - integral, 0.0, Tier::conditional_on_m));
    }
    run.fit_rows(ClaimId::weighted_partial);
    return run;
}

// ---------------------------------------------------------------------------
// Unconditional tier: convolutions with q and bounded coefficient functions.

/// Largest A(x)/sqrt(x) tolerated before a is rejected as not O(sqrt(x)).
inline constexpr double a_growth_limit = 10.0;

inline void validate_a_hypothesis(const ASpec& a, const GridSpec& grid) {
    for (u64 x : grid.xs) {
        const double ratio = static_cast<double>(a.abs_sum(x)) / std::sqrt(static_cast<double>(x));
        if (ratio > a_growth_limit)
            throw hypothesis_error("a = " + a.name() + " violates A(x) = O(sqrt(x)): A(x)/sqrt(x) = " +
                                   detail::fmt_double(ratio) + " at x = " + std::to_string(x));
    }
}

/// h_x = max |h(n)| over sqrt(x) < n <= x.
template <typename HFn>
u64 run_h_max(u64 x, HFn&& h) {
    u64 best = 0;
    for (u64 n = isqrt(x) + 1; n <= x; ++n) best = std::max<u64>(best, static_cast<u64>(std::abs(h(n))));
    return best;
}

struct DecompositionCheck {
    u64 checked = 0;
    std::optional<u64> first_failure;
    i64 direct = 0, final1 = 0, final2 = 0;  ///< values at the failure, if any
};

/// For every x <= x_max, checks that
///   sum_{n<=x} ((lambda*q)*a)(n)                       (direct convolution)
/// = sum_{n<=x} (lambda*q)(n) A(x/n)                     (split a = x, b = 1)
/// = sum_{n<=sqrt x} lambda(n) H(x/n) + sum_{n<=sqrt x} h(n) L(x/n) - L(sqrt x) H(sqrt x).
inline DecompositionCheck check_final_decomposition(const ASpec& a, u64 x_max) {
    const ArithFnTable lam = sieve_table(ArithFn::liouville, x_max);
    const ArithFnTable lq = tabulate(x_max, lambda_conv_q_closed);
    const ArithFnTable a_tab = a.table(x_max);
    const ConvTable h = conv_with_q(a_tab);
    const ConvTable lqa = convolve(lq, a_tab);

    std::vector<i64> H(x_max + 1, 0), LQ(x_max + 1, 0), direct(x_max + 1, 0);
    for (u64 n = 1; n <= x_max; ++n) {
        H[n] = H[n - 1] + h(n);
        LQ[n] = LQ[n - 1] + lq(n);
        direct[n] = direct[n - 1] + lqa(n);
    }
    const PrefixTable L(lam);

    DecompositionCheck out;
    for (u64 x = 1; x <= x_max; ++x) {
        const i64 f1 = hyperbola_sum([&](u64 n) { return lq(n); }, [&](u64 n) { return LQ[n]; },
                                     [&](u64 n) { return a_tab(n); }, [&](u64 n) { return a.sum(n); },
                                     HyperbolaSplit::rational(x, Rational{x}, Rational{1}));
        const i64 f2 = hyperbola_sum([&](u64 n) { return lam(n); }, [&](u64 n) { return L(n); },
                                     [&](u64 n) { return h(n); }, [&](u64 n) { return H[n]; },
                                     HyperbolaSplit::symmetric(x));
        ++out.checked;
        if (f1 != direct[x] || f2 != direct[x]) {
            out.first_failure = x;
            out.direct = direct[x];
            out.final1 = f1;
            out.final2 = f2;
            return out;
        }
    }
    return out;
}

/// Upper end of the exhaustive decomposition check inside run_h_weighted_integral.
inline constexpr u64 decomposition_check_limit = 10000;

/// integral_1^{sqrt x} h(floor(x/t)) L(t)/t^2 dt at each grid point, with the
/// partial sum it controls and h_x. Asserts that x^{1/4}|integral| never
/// exceeds 10x the larger of its two smallest-x values.
inline ClaimRun run_h_weighted_integral(const ASpec& a, const GridSpec& grid, Workspace& ws) {
    grid.validate();
    validate_a_hypothesis(a, grid);
    ClaimRun run{"thm2"};

    const auto dec = check_final_decomposition(a, std::min(grid.max(), decomposition_check_limit));
    if (dec.first_failure)
        throw assertion_failure("hyperbola decomposition mismatch at x = " + std::to_string(*dec.first_failure) +
                                ": direct = " + std::to_string(dec.direct) + ", final1 = " +
                                std::to_string(dec.final1) + ", final2 = " + std::to_string(dec.final2));

    QConvolution h(a), h_small(a), h_scan(a);
    auto L = [&](u64 n) { return ws.L()(n); };
    for (u64 x : grid.xs) {
        const double integral = integrate_pair(x, h, L, Point{1}, Point::sqrt_of(x));
        run.rows.push_back(make_report(ClaimId::h_weighted_integral, x, integral, -0.25, Tier::unconditional));

        i64 partial = 0;
        for (u64 n = 1; n * n <= x; ++n) partial += h_small(n) * ws.L()(x / n);
        run.rows.push_back(make_report(ClaimId::h_weighted_sum, x, static_cast<double>(partial), 0.75, Tier::unconditional));

        run.rows.push_back(make_report(ClaimId::h_max, x, static_cast<double>(run_h_max(x, h_scan)), grid.epsilon,
                                       Tier::unconditional));
    }

    const auto thm = run.rows_for(ClaimId::h_weighted_integral);
    if (thm.size() >= 2) {
        const double bound = 10.0 * std::max(std::abs(thm[0]->scaled), std::abs(thm[1]->scaled));
        for (const auto* r : thm)
            if (std::abs(r->scaled) > bound)
                throw assertion_failure("x^{1/4}|integral| = " + detail::fmt_double(std::abs(r->scaled)) + " at x = " +
                                        std::to_string(r->x) + " exceeds " + detail::fmt_double(bound));
    }
    run.fit_rows(ClaimId::h_weighted_integral);
    return run;
}

/// The same integral with the Mertens function in place of L. Report only.
inline ClaimRun run_mobius_variant(const ASpec& a, const GridSpec& grid, Workspace& ws) {
    grid.validate();
    validate_a_hypothesis(a, grid);
    ClaimRun run{"mobius"};
    QConvolution h(a);
    auto M = [&](u64 n) { return ws.M()(n); };
    for (u64 x : grid.xs)
        run.rows.push_back(make_report(ClaimId::mobius_integral, x, integrate_pair(x, h, M, Point{1}, Point::sqrt_of(x)), -0.25,
                                       Tier::unconditional));
    run.fit_rows(ClaimId::mobius_integral);
    return run;
}

/// sum_{n<=sqrt x} lambda(n) floor(sqrt(x/n)) against sqrt(x) sum lambda(n)/sqrt(n).
/// Each floor moves its term by less than 1, so |difference| <= sqrt(x); the
/// runner asserts the looser |difference| <= 2 sqrt(x).
inline ClaimRun run_sqrt_floor_sum(const GridSpec& grid) {
    grid.validate();
    ClaimRun run{"remark1"};
    const ArithFnTable lam = sieve_table(ArithFn::liouville, isqrt(grid.max()));
    for (u64 x : grid.xs) {
        i64 raw = 0;
        CompensatedSum weighted;
        for (u64 n = 1; n * n <= x; ++n) {
            raw += lam(n) * static_cast<i64>(isqrt(x / n));
            weighted += lam(n) / std::sqrt(static_cast<double>(n));
        }
        const double main = std::sqrt(static_cast<double>(x)) * weighted.value();
        const double diff = static_cast<double>(raw) - main;
        run.rows.push_back(make_report(ClaimId::sqrt_floor_sum, x, static_cast<double>(raw), 0.5, Tier::conditional_on_m));
        run.rows.push_back(make_report(ClaimId::sqrt_floor_main, x, main, 0.5, Tier::conditional_on_m));
        const auto d = make_report(ClaimId::sqrt_floor_diff, x, diff, 0.5, Tier::unconditional);
        run.rows.push_back(d);
        if (std::abs(d.scaled) > 2.0)
            throw assertion_failure("remark1 decomposition difference " + detail::fmt_double(diff) +
                                    " exceeds 2 sqrt(x) at x = " + std::to_string(x));
    }
    run.fit_rows(ClaimId::sqrt_floor_sum);
    return run;
}

/// sum_{n<=sqrt x} s(n) floor(sqrt(x/n)).
inline i64 square_sum_lhs(u64 x) {
    i64 s = 0;
    for (u64 n = 1; n * n <= x; ++n)
        if (is_square(n)) s += static_cast<i64>(isqrt(x / n));
    return s;
}

/// sum_{m<=x^{1/4}} floor(sqrt(x)/m).
inline i64 square_sum_rhs(u64 x) {
    const u64 r = isqrt(x);
    i64 s = 0;
    for (u64 m = 1; m * m <= r; ++m) s += static_cast<i64>(r / m);
    return s;
}

/// Checks the square-sum identity at each grid point, reports the vanishing
/// integral of s(floor(x/t)) floor(sqrt t)/t^2, and scans h = q * s up to
/// the largest grid point asserting that h(n) = 0 forces 4 | n.
inline ClaimRun run_square_indicator_study(const GridSpec& grid) {
    grid.validate();
    ClaimRun run{"remark2"};

    const u64 brute_limit = std::min<u64>(grid.max(), 10000);
    const QConvolution qs(ASpec::square());
    std::vector<i64> window;
    qs.fill(1, brute_limit, window);
    for (u64 n = 1; n <= brute_limit; ++n) {
        i64 brute = 0;
        for (u64 d = 1; d <= n; ++d)
            if (n % d == 0 && is_square(d)) brute += q_fn(n / d);
        if (brute != window[n - 1])
            throw assertion_failure("(q*s)(" + std::to_string(n) + ") block value " + std::to_string(window[n - 1]) +
                                    " disagrees with divisor sum " + std::to_string(brute));
    }

    std::size_t next = 0;
    u64 nonzero = 0;
    const u64 block = u64{1} << 20;
    for (u64 lo = 1; lo <= grid.max(); lo += block) {
        const u64 hi = std::min(grid.max(), lo + block - 1);
        qs.fill(lo, hi, window);
        for (u64 n = lo; n <= hi; ++n) {
            const i64 v = window[n - lo];
            if (v != 0)
                ++nonzero;
            else if (n % 4 != 0)
                throw assertion_failure("(q*s)(" + std::to_string(n) + ") = 0 but 4 does not divide n");
            if (next < grid.xs.size() && n == grid.xs[next]) {
                run.rows.push_back(make_report(ClaimId::square_conv_density, n,
                                               static_cast<double>(nonzero) / static_cast<double>(n), 0.0,
                                               Tier::unconditional));
                ++next;
            }
        }
    }

    auto s = [](u64 n) { return n == 0 ? 0 : square_indicator(n); };
    auto F = [](u64 t) { return static_cast<i64>(isqrt(t)); };
    for (u64 x : grid.xs) {
        const i64 lhs = square_sum_lhs(x), rhs = square_sum_rhs(x);
        if (lhs != rhs)
            throw assertion_failure("square-sum identity fails at x = " + std::to_string(x) + ": " +
                                    std::to_string(lhs) + " != " + std::to_string(rhs));
        run.rows.push_back(make_report(ClaimId::square_sum_identity, x, static_cast<double>(lhs), 0.5,
                                       Tier::unconditional, 1));
        run.rows.push_back(make_report(ClaimId::square_integral, x,
                                       integrate_pair(x, s, F, Point{1}, Point::sqrt_of(x)), -0.5,
                                       Tier::unconditional, 1));
    }
    run.fit_rows(ClaimId::square_integral);
    return run;
}

struct ZetaCheck {
    double lhs = 0.0;         ///< zeta(2s)/zeta(s)
    double rhs = 0.0;         ///< s * integral_1^X L(t)/t^{s+1} dt
    double tail_bound = 0.0;  ///< 2s/((s-1) X^{s-1})
    bool passed() const { return std::abs(lhs - rhs) <= tail_bound + 1e-9; }
};

/// Compares zeta(2s)/zeta(s) with s * integral_1^X L(t)/t^{s+1} dt; the
/// neglected tail is at most s/((s-1) X^{s-1}) since |L(t)| <= t.
inline ZetaCheck run_zeta_check(double s_exp, u64 X) {
    if (!(s_exp > 1.0)) throw domain_error("zeta check needs s > 1");
    if (X < 1000) throw domain_error("zeta check needs X >= 1000");
    const PrefixTable L = PrefixTable::sieved(ArithFn::liouville, X);
    ZetaCheck c;
    c.lhs = zeta_real(2.0 * s_exp) / zeta_real(s_exp);
    c.rhs = s_exp * integrate_L_over_power(static_cast<double>(X), s_exp, L);
    c.tail_bound = 2.0 * s_exp / ((s_exp - 1.0) * std::pow(static_cast<double>(X), s_exp - 1.0));
    if (!c.passed())
        throw assertion_failure("zeta(2s)/zeta(s) = " + detail::fmt_double(c.lhs) + " but s*integral = " +
                                detail::fmt_double(c.rhs) + " (s = " + detail::fmt_double(s_exp) +
                                ", X = " + std::to_string(X) + ")");
    return c;
}

inline ClaimRun run_zeta(double s_exp, u64 X) {
    const ZetaCheck c = run_zeta_check(s_exp, X);
    ClaimRun run{"zeta"};
    run.rows.push_back(make_report(ClaimId::zeta_ratio, X, c.lhs - c.rhs, 0.0, Tier::unconditional));
    return run;
}

} // namespace liouville
