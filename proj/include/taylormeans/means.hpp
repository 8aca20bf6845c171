#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "function_spec.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "stolarsky.hpp"

namespace taylormeans {

// Order-r Taylor polynomial of f about c, expanded into the monomial basis.
inline Polynomial<double> taylor_poly(const FunctionSpec& f, int r, double c) {
    if (r < 0) throw DomainError("negative Taylor order");
    std::vector<double> acc(r + 1, 0.0);
    double kfact = 1.0;
    for (int k = 0; k <= r; ++k) {
        if (k > 0) kfact *= k;
        const double scale = f.derivative(k, c) / kfact;
        // scale * (x - c)^k
        double binom = 1.0;
        double cpow = 1.0;
        for (int i = k; i >= 0; --i) {
            acc[i] += scale * binom * (((k - i) % 2 == 0) ? cpow : -cpow);
            binom = binom * i / (k - i + 1);
            cpow *= c;
        }
    }
    return Polynomial<double>(std::move(acc));
}

inline Polynomial<Rational> taylor_poly_exact(const FunctionSpec& f, int r, const Rational& c) {
    if (r < 0) throw DomainError("negative Taylor order");
    std::vector<Rational> acc(r + 1, Rational(0));
    for (int k = 0; k <= r; ++k) {
        const Rational scale = f.derivative_exact(k, c) / Rational(factorial(k));
        for (int i = 0; i <= k; ++i) {
            Rational term = scale * Rational(binomial(k, i)) * rational_pow(c, k - i);
            if ((k - i) % 2 != 0) term = -term;
            acc[i] += term;
        }
    }
    return Polynomial<Rational>(std::move(acc));
}

inline Polynomial<Complex> taylor_poly_complex(const FunctionSpec& f, int r, Complex c) {
    if (r < 0) throw DomainError("negative Taylor order");
    std::vector<Complex> acc(r + 1, Complex(0.0));
    double kfact = 1.0;
    for (int k = 0; k <= r; ++k) {
        if (k > 0) kfact *= k;
        const Complex scale = f.derivative_complex(k, c) / kfact;
        double binom = 1.0;
        Complex cpow(1.0);
        for (int i = k; i >= 0; --i) {
            acc[i] += scale * binom * (((k - i) % 2 == 0) ? cpow : -cpow);
            binom = binom * i / (k - i + 1);
            cpow *= c;
        }
    }
    return Polynomial<Complex>(std::move(acc));
}

namespace detail {

// Second construction of P_b - P_a: expand the one-line integral form, whose
// x^j coefficient is binom(r,j) (-1)^{r-j} m_{r-j} / r!.
inline Polynomial<double> taylor_diff_from_moments(const MomentSet& ms) {
    const int r = ms.r;
    double rfact = 1.0;
    for (int i = 2; i <= r; ++i) rfact *= i;
    std::vector<double> c(r + 1, 0.0);
    double binom = 1.0;
    for (int j = 0; j <= r; ++j) {
        const double sgn = ((r - j) % 2 == 0) ? 1.0 : -1.0;
        c[j] = binom * sgn * ms.m[r - j] / rfact;
        binom = binom * (r - j) / (j + 1);
    }
    return Polynomial<double>(std::move(c));
}

inline double poly_scale(const Polynomial<double>& p) {
    double s = 0.0;
    for (double v : p.coefficients()) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace detail

// P_b - P_a, built two independent ways (Taylor subtraction and the moment
// expansion) and cross-checked coefficient by coefficient.
inline Polynomial<double> taylor_diff(const FunctionSpec& f, int r, double a, double b,
                                      const Tolerances& tol = {}) {
    detail::require_interval(a, b);
    detail::require_order(r);
    const Polynomial<double> direct = taylor_poly(f, r, b) - taylor_poly(f, r, a);
    const Polynomial<double> via_moments =
        detail::taylor_diff_from_moments(moment_integrals(f, r, a, b, tol));
    const double scale = std::max(detail::poly_scale(direct), 1e-300);
    for (int j = 0; j <= r; ++j)
        if (std::abs(direct.coeff(j) - via_moments.coeff(j)) > tol.dual_route_rel * scale)
            throw MismatchError("Taylor-difference constructions disagree at degree " +
                                std::to_string(j));
    return direct;
}

// Exact twin of taylor_diff for integer powers: both routes must agree to the
// last bit of every rational coefficient.
inline Polynomial<Rational> taylor_diff_exact(const FunctionSpec& f, int r, const Rational& a,
                                              const Rational& b) {
    if (!(0 < a && a < b)) throw DomainError("need 0 < a < b");
    detail::require_order(r);
    const Polynomial<Rational> direct = taylor_poly_exact(f, r, b) - taylor_poly_exact(f, r, a);
    const auto m = moment_integrals_exact(f, r, a, b);
    const Rational rfact = Rational(factorial(r));
    std::vector<Rational> c(r + 1, Rational(0));
    for (int j = 0; j <= r; ++j) {
        Rational term = Rational(binomial(r, j)) * m[r - j] / rfact;
        if ((r - j) % 2 != 0) term = -term;
        c[j] = term;
    }
    const Polynomial<Rational> via_moments{std::vector<Rational>(c)};
    if (direct != via_moments)
        throw MismatchError("exact Taylor-difference constructions disagree");
    return direct;
}

namespace detail {

struct ResidualParts {
    double raw = 0.0;   // | integral of f^(r+1)(t) (z-t)^r dt |
    double mass = 0.0;  //   integral of |f^(r+1)(t)| |z-t|^r dt
};

// The mass integral never cancels, so it converges on the relative criterion
// alone; it then scales the absolute budget of the signed components, which
// do cancel (to zero, at an intersection point).
inline ResidualParts residual_parts(const FunctionSpec& f, int r, double a, double b, Complex z,
                                    const Tolerances& tol) {
    require_interval(a, b);
    require_order(r);
    const auto power_r = [r](Complex w) {
        Complex acc(1.0);
        for (int i = 0; i < r; ++i) acc *= w;
        return acc;
    };
    ResidualParts out;
    out.mass = integrate(
        [&](double t) {
            return std::abs(f.derivative(r + 1, t)) *
                   std::pow(std::hypot(z.real() - t, z.imag()), static_cast<double>(r));
        },
        a, b, tol);
    const double re = integrate(
        [&](double t) { return f.derivative(r + 1, t) * power_r(z - t).real(); }, a, b, tol,
        out.mass);
    const double im = integrate(
        [&](double t) { return f.derivative(r + 1, t) * power_r(z - t).imag(); }, a, b, tol,
        out.mass);
    out.raw = std::hypot(re, im);
    return out;
}

}  // namespace detail

// | integral over [a,b] of f^(r+1)(t) (z-t)^r dt | : zero exactly at the
// intersection points of the two Taylor polynomials.
inline double remainder_residual(const FunctionSpec& f, int r, double a, double b, Complex z,
                                 const Tolerances& tol = {}) {
    return detail::residual_parts(f, r, a, b, z, tol).raw;
}

// remainder_residual divided by the integral of the absolute integrand; the
// scale-free form every acceptance threshold is stated against.
inline double normalized_residual(const FunctionSpec& f, int r, double a, double b, Complex z,
                                  const Tolerances& tol = {}) {
    const detail::ResidualParts parts = detail::residual_parts(f, r, a, b, z, tol);
    return parts.raw / std::max(parts.mass, 1e-300);
}

// Intersection points of P_a and P_b: the real mean (odd r) plus every
// conjugate pair, with in-interval verdicts and a residual certificate.
struct MeanResult {
    std::string spec;
    int r = 0;
    double a = 0.0, b = 0.0;
    std::optional<double> x0;
    std::vector<Complex> pairs;
    std::vector<bool> inside;
    double residual = 0.0;

    bool any_inside() const {
        for (bool f : inside)
            if (f) return true;
        return false;
    }
    bool all_inside() const {
        for (bool f : inside)
            if (!f) return false;
        return true;
    }
};

namespace detail {

inline bool strictly_inside(double x, double a, double b, double band_rel) {
    const double band = band_rel * std::max({1.0, std::abs(a), std::abs(b)});
    return (x - a > band) && (b - x > band);
}

// Power functions are scale-invariant: solving on (1, b/a) and stretching by
// a keeps the arithmetic well-conditioned for extreme intervals.
inline bool rescale_to(const FunctionSpec& f, double a, double& scale) {
    if (f.kind() == FunctionKind::Power && a != 1.0) {
        scale = a;
        return true;
    }
    scale = 1.0;
    return false;
}

}  // namespace detail

// Full pipeline: build P_b - P_a, solve, classify, certify.
inline MeanResult mean_result(const FunctionSpec& f, int r, double a, double b,
                              const Tolerances& tol = {}) {
    detail::require_interval(a, b);
    detail::require_order(r);
    double scale;
    const bool scaled = detail::rescale_to(f, a, scale);
    const double sa = scaled ? 1.0 : a;
    const double sb = scaled ? b / a : b;

    const Polynomial<double> diff = taylor_diff(f, r, sa, sb, tol);
    RootSet roots = all_roots(diff, tol);

    MeanResult res;
    res.spec = f.name();
    res.r = r;
    res.a = a;
    res.b = b;

    if (r % 2 == 1) {
        if (roots.reals.size() != 1)
            throw ConvergenceError("expected exactly one real intersection, found " +
                                   std::to_string(roots.reals.size()));
        res.x0 = roots.reals.front() * scale;
    } else if (!roots.reals.empty()) {
        throw ConvergenceError("even order should give no real intersections, found " +
                               std::to_string(roots.reals.size()));
    }

    for (Complex z : roots.pairs) {
        const Complex zs(z.real() * scale, z.imag() * scale);
        res.pairs.push_back(zs);
        res.inside.push_back(detail::strictly_inside(zs.real(), a, b, tol.interval_band));
    }

    double worst = 0.0;
    if (res.x0) worst = std::max(worst, normalized_residual(f, r, a, b, Complex(*res.x0), tol));
    for (Complex z : res.pairs) worst = std::max(worst, normalized_residual(f, r, a, b, z, tol));
    res.residual = worst;
    if (worst > tol.mean_residual)
        throw ConvergenceError("intersection residual " + std::to_string(worst) +
                               " above tolerance");
    return res;
}

// The mean itself: the unique real intersection point in (a,b) for odd r.
inline double unique_real_mean(const FunctionSpec& f, int r, double a, double b,
                               const Tolerances& tol = {}) {
    if (r % 2 == 0) throw DomainError("the real mean needs odd order r");
    const MeanResult res = mean_result(f, r, a, b, tol);
    if (!res.x0 || !(a < *res.x0 && *res.x0 < b))
        throw ConvergenceError("real intersection escaped (a,b)");
    return *res.x0;
}

// (average of all root real parts, center of mass of f^(r+1)); the two are
// equal in exact arithmetic.
inline std::pair<double, double> real_parts_average_check(const FunctionSpec& f, int r, double a,
                                                          double b, const Tolerances& tol = {}) {
    const MeanResult res = mean_result(f, r, a, b, tol);
    double sum = res.x0 ? *res.x0 : 0.0;
    for (Complex z : res.pairs) sum += 2.0 * z.real();
    return {sum / static_cast<double>(r), center_of_mass(f, r, a, b, tol)};
}

// The cubic whose unique real root locates the conjugate-pair real part for
// r = 3:  8A^2 x^3 - 24AB x^2 + 6(AC + 3B^2) x + (AD - 9BC).
struct GCubic {
    Polynomial<double> poly;
    MomentSet moments;
};

inline GCubic g_cubic(const FunctionSpec& f, double a, double b, const Tolerances& tol = {}) {
    GCubic g;
    g.moments = moment_integrals(f, 3, a, b, tol);
    const double A = g.moments.A(), B = g.moments.B(), C = g.moments.C(), D = g.moments.D();
    g.poly = Polynomial<double>(
        {A * D - 9.0 * B * C, 6.0 * (A * C + 3.0 * B * B), -24.0 * A * B, 8.0 * A * A});
    return g;
}

inline Polynomial<Rational> g_cubic_exact(const FunctionSpec& f, const Rational& a,
                                          const Rational& b) {
    const auto m = moment_integrals_exact(f, 3, a, b);
    const Rational &A = m[0], &B = m[1], &C = m[2], &D = m[3];
    return Polynomial<Rational>({A * D - 9 * B * C, 6 * (A * C + 3 * B * B), -24 * A * B,
                                 8 * A * A});
}

// Independent integral route to the same cubic:
//   9 (int f'''' (x-t)^2)(int f'''' (x-t)) - (int f'''' (x-t)^3)(int f'''').
inline double g_integral_form(const FunctionSpec& f, double a, double b, double x,
                              const Tolerances& tol = {}) {
    detail::require_interval(a, b);
    const auto moment_of = [&](int power) {
        return integrate(
            [&](double t) {
                double w = 1.0;
                for (int i = 0; i < power; ++i) w *= (x - t);
                return f.derivative(4, t) * w;
            },
            a, b, tol);
    };
    return 9.0 * moment_of(2) * moment_of(1) - moment_of(3) * moment_of(0);
}

// r = 3 closed solve: bracket the increasing cubic's root, then read the
// imaginary part off the quadratic cofactor.
inline MeanResult solve_r3_pair(const FunctionSpec& f, double a, double b,
                                const Tolerances& tol = {}) {
    detail::require_interval(a, b);
    double scale;
    const bool scaled = detail::rescale_to(f, a, scale);
    const double sa = scaled ? 1.0 : a;
    const double sb = scaled ? b / a : b;

    const GCubic g = g_cubic(f, sa, sb, tol);
    const auto& poly = g.poly;
    const double A = g.moments.A(), B = g.moments.B(), C = g.moments.C();
    if (g.moments.cauchy_gap() >= 0.0)
        throw SignViolationError("moment gap B^2 - AC unexpectedly nonnegative");

    // g is strictly increasing, so one bracket always exists; grow it
    // geometrically when the root escapes [a,b] (it can).
    double lo = sa, hi = sb;
    double step = sb - sa;
    for (int i = 0; poly(lo) > 0.0; ++i) {
        if (i > 200) throw ConvergenceError("no lower bracket for the pair cubic");
        lo -= step;
        step *= 2.0;
    }
    step = sb - sa;
    for (int i = 0; poly(hi) < 0.0; ++i) {
        if (i > 200) throw ConvergenceError("no upper bracket for the pair cubic");
        hi += step;
        step *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-17 * std::max(1.0, std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (poly(mid) < 0.0 ? lo : hi) = mid;
    }
    double x1 = 0.5 * (lo + hi);
    const Polynomial<double> dpoly = poly.derivative();
    for (int i = 0; i < 3; ++i) {
        const double d = dpoly(x1);
        if (d == 0.0) break;
        x1 -= poly(x1) / d;
    }

    const double radicand = 3.0 * x1 * x1 - (6.0 * B / A) * x1 + 3.0 * C / A;
    if (radicand <= 0.0)
        throw SignViolationError("pair radicand unexpectedly nonpositive");
    const double y1 = std::sqrt(radicand);
    const double x0 = 3.0 * B / A - 2.0 * x1;

    MeanResult res;
    res.spec = f.name();
    res.r = 3;
    res.a = a;
    res.b = b;
    res.x0 = x0 * scale;
    res.pairs = {Complex(x1 * scale, y1 * scale)};
    res.inside = {detail::strictly_inside(x1 * scale, a, b, tol.interval_band)};
    res.residual = std::max(normalized_residual(f, 3, a, b, res.pairs[0], tol),
                            normalized_residual(f, 3, a, b, Complex(*res.x0), tol));
    if (res.residual > tol.mean_residual)
        throw ConvergenceError("pair residual " + std::to_string(res.residual) +
                               " above tolerance");
    return res;
}

// Location bounds for the r = 3 pair of z^p on (1, b): the pair real part in
// closed form plus one-sided certificates from the difference-mean gaps.
struct LocationBounds {
    double x0 = 0.0;   // real mean
    double x1 = 0.0;   // pair real part
    bool lower_ok = false;  // certified  1 < x1   (needs p >= 7/2)
    bool upper_ok = false;  // certified  x1 < b   (needs p < 2)
};

inline LocationBounds theorem2_bounds(double p, double b, const Tolerances& tol = {}) {
    if (!(b > 1.0)) throw DomainError("theorem2_bounds needs b > 1");
    for (double excluded : {0.0, 1.0, 2.0, 3.0})
        if (p == excluded) throw ExcludedExponentError("exponent excluded for r = 3 bounds");
    const FunctionSpec f = FunctionSpec::power(p);
    const double s = p - 2.0;
    LocationBounds out;
    out.x0 = unique_real_mean(f, 3, 1.0, b, tol);
    out.x1 = 0.5 * (3.0 * stolarsky_mean(s, s - 1.0, b, 1.0) - out.x0);

    const MeanResult pair = solve_r3_pair(f, 1.0, b, tol);
    if (std::abs(pair.pairs[0].real() - out.x1) >
        tol.identity_rel * std::max(1.0, std::abs(out.x1)))
        throw MismatchError("pair real part disagrees with the difference-mean identity");

    if (p >= 3.5) out.lower_ok = lower_gap(s, b) > 2.0;
    if (p < 2.0) out.upper_ok = upper_gap(s, b) < 0.0;
    return out;
}

}  // namespace taylormeans
