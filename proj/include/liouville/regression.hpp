#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>

#include "liouville/errors.hpp"

namespace liouville {

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t n_points = 0;
    std::size_t dropped_zeros = 0;
};

/// Least squares of log|value| against log x. Zero values are dropped and
/// counted; at least three must survive.
inline RegressionFit fit_exponent(std::span<const std::pair<double, double>> points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    std::size_t n = 0, dropped = 0;
    for (auto [x, v] : points) {
        if (!(x > 0.0)) throw domain_error("fit_exponent needs positive x");
        if (v == 0.0) {
            ++dropped;
            continue;
        }
        if (!std::isfinite(v)) throw numeric_error("fit_exponent got a non-finite value");
        const double lx = std::log(x), ly = std::log(std::abs(v));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
        ++n;
    }
    if (n < 3) throw domain_error("fit_exponent needs at least 3 nonzero points");

    const double nd = static_cast<double>(n);
    const double cxx = sxx - sx * sx / nd;
    const double cxy = sxy - sx * sy / nd;
    const double cyy = syy - sy * sy / nd;
    if (cxx <= 0.0) throw domain_error("fit_exponent needs distinct x values");

    RegressionFit fit;
    fit.slope = cxy / cxx;
    fit.intercept = (sy - fit.slope * sx) / nd;
    fit.n_points = n;
    fit.dropped_zeros = dropped;
    // cyy ~ 0 means every point lies on a horizontal line, which the fit reproduces.
    fit.r2 = cyy <= 1e-300 ? 1.0 : std::clamp(cxy * cxy / (cxx * cyy), 0.0, 1.0);
    return fit;
}

} // namespace liouville
