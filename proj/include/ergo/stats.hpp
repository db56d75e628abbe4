#pragma once

#include <cmath>
#include <cstdint>

#include "ergo/errors.hpp"

namespace ergo {

struct Interval {
    double low = 0.0;
    double high = 0.0;
    bool contains(double x) const { return low <= x && x <= high; }
};

// Wilson score interval for a binomial proportion. z defaults to the
// two-sided 95% normal quantile.
inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054) {
    if (trials == 0) throw input_error("Wilson interval needs at least one trial");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    // the score interval contains the point estimate and stays inside [0,1];
    // enforce both against floating-point rounding
    const double low = std::min(std::max(center - half, 0.0), p);
    const double high = std::max(std::min(center + half, 1.0), p);
    return {low, high};
}

// Wilson-Hilferty approximation to the chi-square upper quantile; accurate
// to a few parts in 1e3 for k >= 3, plenty for the goodness-of-fit gates.
inline double chi2_critical(int dof, double alpha = 0.05) {
    if (dof < 1) throw input_error("chi-square dof must be positive");
    // z for upper-tail alpha
    double z;
    if (alpha == 0.05) {
        z = 1.6448536269514722;
    } else if (alpha == 0.01) {
        z = 2.3263478740408408;
    } else if (alpha == 0.001) {
        z = 3.090232306167813;
    } else {
        throw input_error("unsupported chi-square tail level");
    }
    const double k = static_cast<double>(dof);
    const double t = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
    return k * t * t * t;
}

}  // namespace ergo
