#pragma once

#include <cmath>

#include "errors.hpp"

namespace taylormeans {

// Two-parameter difference mean E(r,s; x,y).  All the removable-singularity
// branches are taken explicitly; parameters closer than 1e-12 route to the
// corresponding limit form.
inline double stolarsky_mean(double r, double s, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("stolarsky_mean needs x, y > 0");
    constexpr double teps = 1e-12;
    if (x == y || std::abs(x - y) <= teps * std::max(x, y)) return 0.5 * (x + y);
    if (std::abs(r) <= teps && std::abs(s) <= teps) return std::sqrt(x * y);
    if (std::abs(r - s) <= teps) {
        // identric-type limit: exp(-1/r) * (x^{x^r} / y^{y^r})^{1/(x^r - y^r)}
        const double xr = std::pow(x, r), yr = std::pow(y, r);
        return std::exp(-1.0 / r + (xr * std::log(x) - yr * std::log(y)) / (xr - yr));
    }
    if (std::abs(s) <= teps) {
        const double xr = std::pow(x, r), yr = std::pow(y, r);
        return std::pow((xr - yr) / (r * (std::log(x) - std::log(y))), 1.0 / r);
    }
    if (std::abs(r) <= teps) return stolarsky_mean(s, r, x, y);
    const double xr = std::pow(x, r), yr = std::pow(y, r);
    const double xs = std::pow(x, s), ys = std::pow(y, s);
    return std::pow((s / r) * (xr - yr) / (xs - ys), 1.0 / (r - s));
}

// 3 E(s, s-1; x, 1) - x.  Strictly above 2 for s >= 3/2, x > 1; this is the
// certificate that the nonreal pair sits to the right of the left endpoint.
inline double lower_gap(double s, double x) {
    return 3.0 * stolarsky_mean(s, s - 1.0, x, 1.0) - x;
}

// 3 E(s, s-1; x, 1) - 2x - 1.  Strictly negative for s < 0, x > 1; the
// certificate that the pair sits to the left of the right endpoint.
inline double upper_gap(double s, double x) {
    return 3.0 * stolarsky_mean(s, s - 1.0, x, 1.0) - 2.0 * x - 1.0;
}

}  // namespace taylormeans
