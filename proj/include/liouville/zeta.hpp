#pragma once

#include <array>
#include <cmath>

#include "liouville/errors.hpp"
#include "liouville/numeric.hpp"

namespace liouville {

/// zeta(s) for real s > 1 by Euler-Maclaurin summation.
///
/// zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
///         + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
/// with three Bernoulli corrections; N doubles until the first omitted
/// correction drops below 1e-12.
inline double zeta_real(double s) {
    if (!(s > 1.0)) throw domain_error("zeta_real needs s > 1");
    // B_{2j} / (2j)! for j = 1..4
    constexpr std::array<double, 4> coeff{1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};

    auto correction = [&](double N, int j) {
        double rising = 1.0;
        for (int i = 0; i < 2 * j - 1; ++i) rising *= s + i;
        return coeff[j - 1] * rising * std::pow(N, -s - 2 * j + 1);
    };

    u64 N = 16;
    while (std::abs(correction(static_cast<double>(N), 4)) >= 1e-12 && N < (u64{1} << 30)) N *= 2;

    CompensatedSum sum;
    for (u64 n = N - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double Nd = static_cast<double>(N);
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Nd, -s);
    for (int j = 1; j <= 3; ++j) sum += correction(Nd, j);
    return sum.value();
}

} // namespace liouville
