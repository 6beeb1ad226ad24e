#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "liouville/a_spec.hpp"
#include "liouville/dirichlet.hpp"
#include "liouville/stepquad.hpp"
#include "liouville/summatory.hpp"
#include "oracles.hpp"

using namespace liouville;

namespace {

// Every breakpoint as a long double, integrand sampled at each piece midpoint.
double piecewise_oracle(u64 x, const std::function<i64(u64)>& h, const std::vector<i64>& L, long double lo,
                        long double hi) {
    std::vector<long double> cuts{lo, hi};
    for (u64 n = static_cast<u64>(std::ceil(lo)); n <= static_cast<u64>(std::floor(hi)); ++n) cuts.push_back(n);
    for (u64 k = 1; k <= x; ++k) {
        const long double c = static_cast<long double>(x) / k;
        if (c > lo && c < hi) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [](long double a, long double b) { return b - a < 1e-15L; }),
               cuts.end());
    long double s = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const long double a = cuts[i], b = cuts[i + 1], m = (a + b) / 2;
        const u64 ft = static_cast<u64>(std::floor(m));
        const u64 q = static_cast<u64>(std::floor(static_cast<long double>(x) / m));
        s += static_cast<long double>(h(q) * L[ft]) * (1 / a - 1 / b);
    }
    return static_cast<double>(s);
}

std::function<i64(u64)> h_oracle(const ASpec& a) {
    return [a](u64 n) -> i64 { return oracle::dirichlet(oracle::q, [&](u64 k) { return a(k); }, n); };
}

}  // namespace

TEST(Point, ExactOrdering) {
    EXPECT_EQ(Point::sqrt_of(16), Point{4});
    EXPECT_LT(Point{3}, Point::sqrt_of(10));
    EXPECT_LT(Point::sqrt_of(10), Point(Rational{19, 6}));  // 3.1623 < 3.1667
    EXPECT_GT(Point::sqrt_of(10), Point(Rational{22, 7}));  // 3.1623 > 3.1429
    EXPECT_LT(Point::sqrt_of(99), Point::sqrt_of(100));
    EXPECT_EQ(Point::sqrt_of(10).floor(), 3u);
    EXPECT_EQ(Point::sqrt_of(10).ceil(), 4u);
    EXPECT_EQ(Point::sqrt_of(9).ceil(), 3u);
    EXPECT_EQ(Point::sqrt_of(1000).floor_quotient(1000), 31u);
    EXPECT_TRUE(Point::sqrt_of(100).divides_into(20));
    EXPECT_EQ(Point::sqrt_of(7).str(), "sqrt(7)");
    EXPECT_THROW(Point{0}, domain_error);
}

TEST(Breakpoints, MatchBruteForceSet) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const u64 x = 2 + rng() % 2000;
        const Rational lo{1 + rng() % (x - 1), 1 + rng() % 3};
        const Rational hi{x, 1 + rng() % 4};
        if (!(lo < hi) || lo < Rational{1}) continue;
        std::set<std::pair<u64, u64>> expected;
        auto add = [&](Rational r) {
            r = r.reduced();
            expected.emplace(r.num, r.den);
        };
        add(lo);
        add(hi);
        for (u64 n = lo.ceil(); n <= hi.floor(); ++n) add(Rational{n});
        for (u64 k = 1; k <= x; ++k)
            if (Rational{x, k} > lo && Rational{x, k} < hi) add(Rational{x, k});
        const auto got = breakpoints_quotient(x, lo, hi);
        ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
        std::set<std::pair<u64, u64>> got_set;
        for (auto r : got) got_set.emplace(r.num, r.den);
        ASSERT_EQ(got_set.size(), got.size()) << "duplicate breakpoint for x=" << x;
        ASSERT_EQ(got_set, expected) << "x=" << x << " lo=" << lo.str() << " hi=" << hi.str();
    }
}

TEST(Breakpoints, Contract) {
    EXPECT_THROW(breakpoints_quotient(10, Rational{0, 1}, Rational{5}), domain_error);
    EXPECT_THROW(breakpoints_quotient(10, Rational{5}, Rational{5}), domain_error);
    EXPECT_THROW(breakpoints_quotient(10, Rational{2}, Rational{11}), domain_error);
}

TEST(PiecewiseConstant, IntegratesAgainstWeight) {
    PiecewiseConstant f({Rational{1}, Rational{3, 2}, Rational{4}}, {2, -1});
    EXPECT_EQ(f(1.2), 2);
    EXPECT_EQ(f(3.0), -1);
    const double v = f.integrate([](Rational a, Rational b) { return b.to_double() - a.to_double(); });
    EXPECT_DOUBLE_EQ(v, 2 * 0.5 - 2.5);
    EXPECT_THROW(PiecewiseConstant({Rational{2}, Rational{1}}, {1}), domain_error);
    EXPECT_THROW(PiecewiseConstant({Rational{1}, Rational{2}}, {1, 2}), domain_error);
}

TEST(PowerDifference, StableForCloseEndpoints) {
    for (double s : {0.5, 1.0, 1.75, 3.0}) {
        EXPECT_NEAR(power_difference(2.0, 3.0, s), std::pow(2.0, -s) - std::pow(3.0, -s), 1e-15);
        // a^{-s} (1 - (1 + u)^{-s}) with u = 1/a, expanded as a binomial series.
        const double a = 1e8, b = 1e8 + 1;
        const long double u = 1.0L / a;
        long double term = 1, series = 0;
        for (int k = 1; k < 6; ++k) {
            term *= -(s + k - 1) / k * u;
            series -= term;
        }
        const long double exact = std::pow(static_cast<long double>(a), -s) * series;
        EXPECT_NEAR(power_difference(a, b, s) / static_cast<double>(exact), 1.0, 1e-13);
    }
}

TEST(IntegrateLOverPower, MatchesStepOracle) {
    const auto L = oracle::L_table(20000);
    auto Lf = [&](u64 n) { return L[n]; };
    for (double s : {0.6, 1.0, 2.0}) {
        for (double X : {1.0, 7.5, 100.0, 19999.25}) {
            const double got = integrate_L_over_power(X, s, Lf);
            const double want = oracle::step_power_integral([&](u64 n) { return double(L[n]); }, 1.0, X, s + 1);
            EXPECT_NEAR(got, want, 1e-11) << "s=" << s << " X=" << X;
        }
    }
    EXPECT_THROW(integrate_L_over_power(0.5, 1.0, Lf), domain_error);
}

TEST(IntegratePair, MatchesPiecewiseOracle) {
    const auto L = oracle::L_table(200);
    std::mt19937_64 rng(17);
    for (const ASpec& a : {ASpec::square(), ASpec::unit_at_1(), ASpec::powers_of_2()}) {
        const auto h = h_oracle(a);
        for (int i = 0; i < 25; ++i) {
            const u64 x = 4 + rng() % 20000;
            QConvolution hc(a);
            const double got = integrate_pair(x, hc, [&](u64 n) { return L[n]; }, Point{1}, Point::sqrt_of(x));
            const double want = piecewise_oracle(x, h, L, 1.0L, std::sqrt(static_cast<long double>(x)));
            ASSERT_NEAR(got, want, 1e-12) << a.name() << " x=" << x;
        }
    }
}

TEST(IntegratePair, MidpointOracleSmallX) {
    const auto L = oracle::L_table(10);
    const ASpec a = ASpec::square();
    const auto h = h_oracle(a);
    QConvolution hc(a);
    auto integrand = [&](u64 x) {
        return [&, x](double t) {
            return static_cast<double>(h(static_cast<u64>(std::floor(x / t))) * L[static_cast<u64>(std::floor(t))]) /
                   (t * t);
        };
    };

    // x = 9: exact value -1/9.
    const double v9 = integrate_pair(9, hc, [&](u64 n) { return L[n]; }, Point{1}, Point::sqrt_of(9));
    EXPECT_NEAR(v9, -1.0 / 9.0, 1e-15);
    EXPECT_NEAR(v9, oracle::midpoint(integrand(9), 1.0, 3.0, 1000000), 1e-6);

    // x = 16: exact value 1/24. The 10^6-cell midpoint rule misses each jump
    // by at most |jump| * dt, and the smooth part by max|f''| dt^2 (hi - lo) / 24.
    const double v16 = integrate_pair(16, hc, [&](u64 n) { return L[n]; }, Point{1}, Point::sqrt_of(16));
    EXPECT_NEAR(v16, 1.0 / 24.0, 1e-15);
    const double dt = 3.0 / 1e6;
    i64 peak = 0;
    for (u64 q = 4; q <= 16; ++q)
        for (u64 n = 1; n <= 4; ++n) peak = std::max<i64>(peak, std::abs(h(q) * L[n]));
    const double jumps = static_cast<double>(breakpoints_quotient(16, 1, 4).size());
    const double bound = jumps * 2.0 * static_cast<double>(peak) * dt + 6.0 * static_cast<double>(peak) * dt * dt * 3 / 24;
    EXPECT_NEAR(v16, oracle::midpoint(integrand(16), 1.0, 4.0, 1000000), bound);
}

TEST(IntegratePair, PieceAdditivity) {
    const auto L = oracle::L_table(1000);
    auto Lf = [&](u64 n) { return L[n]; };
    QConvolution h(ASpec::powers_of_2());
    for (u64 x : {50ULL, 997ULL, 12345ULL, 999999ULL}) {
        const u64 r = isqrt(x);
        const double whole = integrate_pair(x, h, Lf, Point{1}, Point::sqrt_of(x));
        for (Point mid : {Point{2}, Point(Rational{x, r + 3}), Point(Rational{7, 3}), Point(Rational{r, 2})}) {
            if (!(Point{1} < mid) || !(mid < Point::sqrt_of(x))) continue;
            const double parts = integrate_pair(x, h, Lf, Point{1}, mid) + integrate_pair(x, h, Lf, mid, Point::sqrt_of(x));
            EXPECT_NEAR(parts, whole, 1e-13) << "x=" << x << " mid=" << mid.str();
        }
    }
    EXPECT_EQ(integrate_pair(100, h, Lf, Point{3}, Point{3}), 0.0);
    EXPECT_THROW(integrate_pair(100, h, Lf, Point{1}, Point{11}), domain_error);
}

TEST(QuotientForm, ChangeOfVariables) {
    // integral_{sqrt x}^{x} L(x/t) dt = x * integral_1^{sqrt x} L(u)/u^2 du.
    const auto L = oracle::L_table(1000);
    auto Lf = [&](u64 n) { return L[n]; };
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        const u64 x = 2 + rng() % 999999;
        const double lhs = integrate_L_quotient_form(x, Lf);
        const double rhs = static_cast<double>(x) * integrate_L_over_power(std::sqrt(double(x)), 1.0, Lf);
        EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(rhs))) << x;
    }
}

TEST(QuotientForm, ResidualBoundBruteForce) {
    // |sum_{sqrt x < n <= x} L(x/n) - integral_{sqrt x}^x L(x/t) dt| <= 4 sqrt x.
    const auto L = oracle::L_table(10000);
    auto Lf = [&](u64 n) { return L[n]; };
    double worst = 0;
    for (u64 x = 2; x <= 10000; ++x) {
        i64 sum = 0;
        for (u64 n = isqrt(x) + 1; n <= x; ++n) sum += L[x / n];
        const double integral = static_cast<double>(x) *
                                oracle::step_power_integral([&](u64 n) { return double(L[n]); }, 1.0,
                                                            std::sqrt(static_cast<double>(x)), 2.0);
        EXPECT_NEAR(integrate_L_quotient_form(x, Lf), integral, 1e-9 * std::max(1.0, std::abs(integral))) << x;
        worst = std::max(worst, std::abs(static_cast<double>(sum) - integral) / std::sqrt(static_cast<double>(x)));
    }
    EXPECT_LE(worst, 4.0);
    RecordProperty("worst_residual_ratio", std::to_string(worst));
}
