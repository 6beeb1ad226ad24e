#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <thread>

#include "liouville/summatory.hpp"
#include "oracles.hpp"

using namespace liouville;

TEST(Summatory, SievedMatchesOracle) {
    const auto L = oracle::L_table(30000);
    const auto M = oracle::M_table(30000);
    for (u64 x : {1ULL, 2ULL, 10ULL, 999ULL, 30000ULL}) {
        EXPECT_EQ(L_sieved(x), L[x]);
        EXPECT_EQ(M_sieved(x), M[x]);
    }
}

TEST(Summatory, KnownValues) {
    // Published values of the Liouville and Mertens summatory functions.
    SummatoryCache L = SummatoryCache::for_max(1000000000ULL);
    MertensCache M = MertensCache::for_max(1000000000ULL);
    EXPECT_EQ(L_sublinear(10, L), 0);
    EXPECT_EQ(L_sublinear(100, L), -2);
    EXPECT_EQ(L_sublinear(1000, L), -14);
    EXPECT_EQ(L_sublinear(906150257ULL, L), 1);  // first sign change above 1
    EXPECT_EQ(L_sublinear(1000000000ULL, L), -25216);
    EXPECT_EQ(M_sublinear(1000000, M), 212);
    EXPECT_EQ(M_sublinear(1000000000ULL, M), -222);
}

TEST(Summatory, SublinearAgreesWithSieve) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        const u64 x = 1 + rng() % 3000000;
        SummatoryCache L(1000);
        MertensCache M(1000);
        ASSERT_EQ(L_sublinear(x, L), L_sieved(x)) << x;
        ASSERT_EQ(M_sublinear(x, M), M_sieved(x)) << x;
    }
}

TEST(Summatory, QuotientIdentity) {
    const auto L = oracle::L_table(20000);
    const auto M = oracle::M_table(20000);
    for (u64 x = 1; x <= 20000; ++x) {
        i64 sL = 0, sM = 0;
        for (u64 n = 1; n <= x; ++n) {
            sL += L[x / n];
            sM += M[x / n];
        }
        ASSERT_EQ(sL, static_cast<i64>(std::sqrt(static_cast<double>(x)) + 1e-9)) << x;
        ASSERT_EQ(sM, 1) << x;
    }
}

TEST(Summatory, QuotientSumRanges) {
    const auto L = oracle::L_table(50000);
    auto Lf = [&](u64 n) { return L[n]; };
    for (u64 x : {1ULL, 17ULL, 1000ULL, 49999ULL}) {
        i64 lower = 0, upper = 0;
        for (u64 n = 1; n <= x; ++n) (n * n <= x ? lower : upper) += L[x / n];
        EXPECT_EQ(quotient_sum(x, QuotientRange::lower, Lf), lower) << x;
        EXPECT_EQ(quotient_sum(x, QuotientRange::upper, Lf), upper) << x;
        EXPECT_EQ(quotient_sum(x, QuotientRange::full, Lf), lower + upper) << x;
    }
}

TEST(Summatory, QuotientBlocksAreMaximal) {
    for (u64 x : {1ULL, 100ULL, 12345ULL}) {
        u64 next = 1, blocks = 0;
        for_each_quotient_block(x, 1, x, [&](u64 q, u64 first, u64 last) {
            EXPECT_EQ(first, next);
            EXPECT_EQ(x / first, q);
            EXPECT_EQ(x / last, q);
            if (last < x) EXPECT_NE(x / (last + 1), q);
            next = last + 1;
            ++blocks;
        });
        EXPECT_EQ(next, x + 1);
        EXPECT_LE(blocks, 2 * isqrt(x));
    }
}

TEST(Summatory, QClosedForm) {
    for (u64 x = 0; x < 100; ++x) {
        int q = 0;
        for (u64 n = 1; n <= x; ++n) q += oracle::q(n);
        EXPECT_EQ(Q_closed(x), q);
        EXPECT_EQ(Q_closed(static_cast<double>(x) + 0.5), q);
    }
}

TEST(Summatory, StreamMatchesPrefix) {
    const auto L = oracle::L_table(100000);
    SummatoryStream s(ArithFn::liouville, 100000, 777);
    for (u64 n = 1; n <= 100000; n += 13) ASSERT_EQ(s(n), L[n]);
    EXPECT_THROW(s(5), domain_error);
    EXPECT_THROW(s(100001), domain_error);
}

TEST(Summatory, CacheSeedAndBudget) {
    SummatoryCache c(1000);
    EXPECT_EQ(c(1000000), L_sieved(1000000));
    EXPECT_THROW(c.seed(500, 99), domain_error);
    EXPECT_THROW(c.seed(1000000, 3), domain_error);
    SummatoryCache tiny(100, 1);
    EXPECT_THROW(tiny(10000000), capacity_error);
}

TEST(Summatory, ConcurrentReaders) {
    SummatoryCache c = SummatoryCache::for_max(100000000);
    const i64 expected = c(100000000);
    std::vector<std::thread> threads;
    std::vector<i64> got(4);
    for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { got[i] = c(100000000 / (i + 1)); });
    for (auto& t : threads) t.join();
    for (int i = 0; i < 4; ++i) EXPECT_EQ(got[i], L_sieved(100000000 / (i + 1)));
    EXPECT_EQ(c(100000000), expected);
}

TEST(Summatory, WeightedPartialAndTail) {
    const auto L = oracle::L_table(20000);
    long double s2 = 0, s15 = 0, s17 = 0;
    for (u64 n = 1; n <= 20000; ++n) {
        s2 += L[n] / (static_cast<long double>(n) * n);
        s15 += L[n] / std::pow(static_cast<long double>(n), 1.5L);
        s17 += L[n] / std::pow(static_cast<long double>(n), 1.7L);
    }
    EXPECT_NEAR(weighted_partial(2.0, 20000), static_cast<double>(s2), 1e-12);
    EXPECT_NEAR(weighted_partial(1.5, 20000), static_cast<double>(s15), 1e-12);
    EXPECT_NEAR(weighted_partial(1.7, 20000), static_cast<double>(s17), 1e-12);

    long double tail = 0;
    for (u64 n = 101; n <= 20000; ++n) tail += L[n] / (static_cast<long double>(n) * n);
    const auto t = tail_L_over_n2(100, 20000);
    EXPECT_NEAR(t.value, static_cast<double>(tail), 1e-13);
    EXPECT_GT(t.truncation_bound, 0.0);
    EXPECT_FALSE(t.rigorous);
}

TEST(Summatory, AbelSummation) {
    const auto lam = sieve_table(ArithFn::liouville, 5000);
    const PrefixTable L(lam);
    for (double s : {0.5, 1.0, 2.0}) {
        long double direct = 0;
        for (u64 n = 1; n <= 5000; ++n) direct += oracle::lambda(n) * std::pow(static_cast<long double>(n), -s);
        const double got = abel_sum(L, [s](double t) { return std::pow(t, -s); },
                                    [s](double t) { return -s * std::pow(t, -s - 1); }, 5000.7);
        EXPECT_NEAR(got, static_cast<double>(direct), 1e-10) << s;
    }
    EXPECT_THROW(abel_sum(L, [](double) { return 1.0; }, [](double) { return 0.0; }, 0.5), domain_error);
}

TEST(Summatory, CheckpointRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "liouville_checkpoint_test.csv";
    const std::map<u64, i64> values{{1000, -14}, {10000, -94}};
    write_checkpoint(path, values);
    EXPECT_EQ(read_checkpoint(path), values);
    std::ofstream(path) << "x,y\n1,1\n";
    EXPECT_THROW(read_checkpoint(path), std::runtime_error);
    std::filesystem::remove(path);
}
