#pragma once

#include <cmath>
#include <utility>

#include "config.hpp"
#include "errors.hpp"

namespace taylormeans {

namespace detail {

template <class F>
double simpson(F&& f, double a, double fa, double b, double fb, double* fm_out) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    *fm_out = fm;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adapt(F&& f, double a, double fa, double m, double fm, double b, double fb, double whole,
             double abs_budget, double rel_tol, int depth) {
    if (depth <= 0) throw QuadratureError("adaptive quadrature hit its subdivision cap");
    double flm, frm;
    const double left = simpson(f, a, fa, m, fm, &flm);
    const double right = simpson(f, m, fm, b, fb, &frm);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= abs_budget || std::abs(err) <= rel_tol * std::abs(left + right))
        return left + right + err;
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    // a kink (e.g. |z - t| at an interior root) can drag the recursion down to
    // machine-width panels; once the midpoints stop separating there is
    // nothing left to resolve and the panel estimate is as good as it gets
    if (!(a < lm && lm < m && m < rm && rm < b)) return left + right + err;
    return adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * abs_budget, rel_tol, depth - 1) +
           adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * abs_budget, rel_tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction.  A panel is accepted when its
// error estimate clears either the (halving) absolute budget or the relative
// target; running out of depth throws instead of degrading silently.
// `abs_scale` rescales the absolute budget for integrands whose natural
// magnitude is far from 1 (e.g. cancelling integrals of huge derivatives).
template <class F>
double integrate(F&& f, double a, double b, const Tolerances& tol = {},
                 double abs_scale = 1.0) {
    if (!(a < b)) throw DomainError("integrate needs a < b");
    const double fa = f(a), fb = f(b);
    double fm;
    const double whole = detail::simpson(f, a, fa, b, fb, &fm);
    return detail::adapt(f, a, fa, 0.5 * (a + b), fm, b, fb, whole,
                         tol.quadrature_abs * std::max(abs_scale, 1.0), tol.quadrature_rel,
                         tol.quadrature_max_depth);
}

}  // namespace taylormeans
