#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace taylormeans {

// Roots of a real-coefficient polynomial, split into the real ones and one
// representative (Im > 0) per conjugate pair.  residual is the worst relative
// backward error |p(z)| / sum_i |c_i||z|^i over all roots: scale-free, about
// machine epsilon for a well-converged root.
struct RootSet {
    std::vector<double> reals;
    std::vector<Complex> pairs;
    double residual = 0.0;
};

inline double backward_error(const Polynomial<Complex>& p, Complex z) {
    const Complex value = p(z);
    double scale = 0.0;
    const double az = std::abs(z);
    double zpow = 1.0;
    for (const Complex& ci : p.coefficients()) {
        scale += std::abs(ci) * zpow;
        zpow *= az;
    }
    return std::abs(value) / std::max(scale, 1e-300);
}

// All complex roots by simultaneous (Durand-Kerner) iteration plus a Newton
// polish.  Handles complex coefficients; degree 0 yields no roots.
inline std::vector<Complex> solve_roots(const Polynomial<Complex>& input, int max_iter = 500) {
    if (input.is_zero()) throw ZeroPolynomialError("roots of the zero polynomial");
    const std::size_t n = input.degree();
    if (n == 0) return {};

    // Monic normalization keeps the iteration scale-free.
    std::vector<Complex> c(input.coefficients());
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;
    const Polynomial<Complex> p{std::vector<Complex>(c)};
    const Polynomial<Complex> dp = p.derivative();

    double radius = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;

    // Non-symmetric starting angles avoid stalling on symmetric root sets.
    std::vector<Complex> z(n);
    const Complex seed = std::polar(1.0, 0.437);
    Complex spin(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        spin *= seed * std::polar(1.0, 2.0 * M_PI / static_cast<double>(n));
        z[k] = radius * spin;
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex denom(1.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex d = z[k] - z[j];
                if (std::abs(d) < 1e-300) d = Complex(1e-300);
                denom *= d;
            }
            const Complex step = p(z[k]) / denom;
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
        }
        if (worst < 1e-15) break;
    }

    for (auto& root : z)
        for (int i = 0; i < 3; ++i) {
            const Complex d = dp(root);
            if (std::abs(d) < 1e-300) break;
            root -= p(root) / d;
        }

    std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

inline std::vector<Complex> solve_roots(const Polynomial<double>& p, int max_iter = 500) {
    return solve_roots(p.cast<Complex>(), max_iter);
}

// Groups raw roots into reals and conjugate pairs.  |Im z| within the
// relative pairing radius snaps to the real axis; every remaining nonreal
// root must find a partner or UnpairedRootError is thrown.
inline RootSet pair_conjugates(const std::vector<Complex>& raw, double pairing_tol = 1e-9) {
    RootSet rs;
    std::vector<Complex> upper, lower;
    for (const Complex& z : raw) {
        if (std::abs(z.imag()) <= pairing_tol * std::max(1.0, std::abs(z)))
            rs.reals.push_back(z.real());
        else
            (z.imag() > 0 ? upper : lower).push_back(z);
    }
    std::vector<bool> used(lower.size(), false);
    for (const Complex& z : upper) {
        const Complex want = std::conj(z);
        std::size_t best = lower.size();
        double best_dist = pairing_tol * std::max(1.0, std::abs(z)) * 16.0;
        for (std::size_t i = 0; i < lower.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(lower[i] - want);
            if (d <= best_dist) {
                best_dist = d;
                best = i;
            }
        }
        if (best == lower.size())
            throw UnpairedRootError("no conjugate partner for root (" +
                                    std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                                    "i)");
        used[best] = true;
        rs.pairs.emplace_back(z.real(), std::abs(z.imag()));
    }
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (!used[i])
            throw UnpairedRootError("no conjugate partner for root (" +
                                    std::to_string(lower[i].real()) + ", " +
                                    std::to_string(lower[i].imag()) + "i)");
    std::sort(rs.reals.begin(), rs.reals.end());
    std::sort(rs.pairs.begin(), rs.pairs.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return rs;
}

// Solve + pair + certify: residual above tolerance is an error, not a value.
inline RootSet all_roots(const Polynomial<double>& p, const Tolerances& tol = {}) {
    const auto raw = solve_roots(p);
    RootSet rs = pair_conjugates(raw, tol.pairing);
    const auto pc = p.cast<Complex>();
    for (double x : rs.reals) rs.residual = std::max(rs.residual, backward_error(pc, Complex(x)));
    for (Complex z : rs.pairs) rs.residual = std::max(rs.residual, backward_error(pc, z));
    if (rs.residual > tol.root_residual)
        throw ConvergenceError("root residual " + std::to_string(rs.residual) +
                               " above tolerance");
    return rs;
}

// Real roots strictly inside (a, b), ascending.
inline std::vector<double> real_roots_in(const Polynomial<double>& p, double a, double b,
                                         const Tolerances& tol = {}) {
    if (!(a < b)) throw DomainError("real_roots_in needs a < b");
    const RootSet rs = all_roots(p, tol);
    std::vector<double> out;
    for (double x : rs.reals)
        if (a < x && x < b) out.push_back(x);
    return out;
}

}  // namespace taylormeans
